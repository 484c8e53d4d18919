"""JSON and DOT persistence."""
import json

from .errors import HermilatError
from .field import field_from_json
from .lattice import FiniteGaloisLattice, LatticeHom, product_projection
from .space import space_from_json, subspace_from_json


class SpecError(HermilatError, ValueError):
    """Malformed input file."""


def dumps(obj):
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None


def write_text(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def _require(obj, *keys):
    if not isinstance(obj, dict):
        raise SpecError("expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SpecError(f"missing key(s): {', '.join(missing)}")


def load_field(obj):
    _require(obj, "p")
    return field_from_json(obj)


def load_space(obj, force_cap=False):
    _require(obj, "field", "gram")
    return space_from_json(obj, force_cap=force_cap)


def load_subspace(space, obj):
    _require(obj, "basis")
    return subspace_from_json(space.field, obj, space.n)


def lattice_to_json(L):
    return L.to_json()


def load_lattice(obj):
    _require(obj, "elements", "covers", "prime")
    m = len(obj["elements"])
    L = FiniteGaloisLattice.from_covers(m, [tuple(c) for c in obj["covers"]], obj["prime"], obj["elements"])
    for key, val in (("zero", L.zero), ("one", L.one)):
        if key in obj and obj[key] != val:
            raise SpecError(f"declared {key} {obj[key]} disagrees with the order ({val})")
    return L


def lattice_to_dot(L, name="lattice"):
    """Hasse diagram (solid, upward covers) with x -> x' as dashed arcs."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for i, lab in enumerate(L.labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for i, j in L.covers():
        lines.append(f"  n{i} -> n{j} [arrowhead=none];")
    for i in range(L.size):
        j = int(L.prime[i])
        lines.append(f"  n{i} -> n{j} [style=dashed, constraint=false, color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def matrix_to_json(A):
    return [list(row) for row in A]


def matrix_from_json(obj, n=None):
    A = tuple(tuple(int(x) for x in row) for row in obj)
    if n is not None and (len(A) != n or any(len(r) != n for r in A)):
        raise SpecError(f"expected a {n}x{n} matrix")
    return A


def lattice_hom_to_json(phi):
    return {"map": [[i, int(j)] for i, j in enumerate(phi.mapping)]}


def lattice_hom_from_json(obj, source, target, factors=None):
    """Decode a hom; projection records need the product's ``factors``."""
    if obj.get("kind") == "projection":
        if factors is None:
            raise SpecError("projection hom needs the factor lattices")
        return LatticeHom(source, target, product_projection(factors, obj["component"]))
    _require(obj, "map")
    f = [None] * source.size
    for i, j in obj["map"]:
        f[i] = j
    if any(x is None for x in f):
        raise SpecError("hom map does not cover every source element")
    return LatticeHom(source, target, f)


def projection_hom_json(component):
    return {"kind": "projection", "component": int(component)}
