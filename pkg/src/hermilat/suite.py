"""Instance generation and the verification suite over a grid of small spaces."""
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg as la
from .constructions import field_embedding, joint_extension, lift_ring_embedding, tensorial_embed
from .field import FROBENIUS_HALF, IDENTITY, make_field
from .lattice import (
    LatticeHom,
    check_laws,
    congruences,
    faithful_family,
    non_polarity_example,
    pentagon,
    product,
    product_projection,
)
from .ring import (
    MatrixRing,
    ProductRing,
    RingHom,
    lift_quasi_inverse,
    projection_hom,
    projections,
    reconstruction_roundtrip,
    regularity_report,
)
from .space import extend_to_summand, inner, is_subspace_of, is_summand, make_space, space_from_json
from .subspace_lattice import (
    geometry_roundtrip,
    geometry_axiom_check,
    geometry_of_lattice,
    geometry_of_space,
    lattice_of_space,
    ideal_lattice_check,
)

ARGUESIAN_EXHAUSTIVE_LIMIT = 16**6
ARGUESIAN_SAMPLES = 10**6
LIFTING_INSTANCES = 500


# -- instance generation ---------------------------------------------------------

def is_grid_space(space):
    c = space.classification
    return c.nondegenerate and c.epsilon is not None


def enumerate_spaces(F, n):
    """Every invertible epsilon-hermitian Gram matrix of size n, in code order."""
    for G in la.all_matrices(F, n, n):
        if la.is_invertible(F, G):
            V = make_space(F, G)
            if is_grid_space(V):
                yield V


def sample_spaces(F, n, count, seed):
    """``count`` distinct random invertible epsilon-hermitian spaces, by rejection."""
    rng = np.random.default_rng(seed)
    seen, out = set(), []
    while len(out) < count:
        G = tuple(tuple(int(x) for x in row) for row in rng.integers(0, F.q, size=(n, n)))
        if G in seen or not la.is_invertible(F, G):
            continue
        V = make_space(F, G)
        if is_grid_space(V):
            seen.add(G)
            out.append(V)
    return out


@dataclass
class GridEntry:
    name: str
    space: object
    mode: str  # "exhaustive" or "sampled"


def space_name(V):
    F = V.field
    inv = "" if F.involution == IDENTITY else "*"
    gram = ";".join(",".join(map(str, r)) for r in V.gram)
    return f"GF({F.q}){inv}^{V.n}[{gram}]"


def default_grid(seed=0, samples=2):
    F2, F3 = make_field(2), make_field(3)
    entries = []
    blocks = [(F2, 1), (F2, 2), (F2, 3), (F3, 1), (F3, 2), (make_field(2, 2), 2),
              (make_field(2, 2, involution=FROBENIUS_HALF), 2)]
    for F, n in blocks:
        entries += [GridEntry(space_name(V), V, "exhaustive") for V in enumerate_spaces(F, n)]
    for F, n in ((F2, 4), (F3, 3)):
        entries += [GridEntry(space_name(V), V, "sampled") for V in sample_spaces(F, n, samples, seed)]
    return entries


def grid_from_json(obj):
    return [GridEntry(space_name(V), V, "given") for V in (space_from_json(s) for s in obj["spaces"])]


# -- report ----------------------------------------------------------------------

STATUSES = ("pass", "fail", "skipped-cap")


@dataclass
class CheckRecord:
    id: str
    anchor: str
    status: str
    witness: object = None
    details: dict = dc_field(default_factory=dict)
    seconds: float = None

    def to_json(self, timings=False):
        out = {"id": self.id, "anchor": self.anchor, "status": self.status,
               "witness": self.witness, "details": self.details}
        if timings and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class VerificationReport:
    suite: str
    seed: int
    records: list

    @property
    def passed(self):
        return all(r.status == "pass" for r in self.records)

    def to_json(self, timings=False):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "records": [r.to_json(timings) for r in sorted(self.records, key=lambda r: r.id)],
        }

    @classmethod
    def from_json(cls, obj):
        recs = [CheckRecord(r["id"], r["anchor"], r["status"], r.get("witness"), r.get("details", {}),
                            r.get("seconds")) for r in obj["records"]]
        for r in recs:
            if r.status not in STATUSES:
                raise ValueError(f"unknown status {r.status!r}")
        return cls(obj["suite"], obj["seed"], recs)


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    return x


# -- individual checks ------------------------------------------------------------
# Each returns (passed, witness, details).

def _perp_symmetric(V):
    vecs = list(la.all_vectors(V.field, V.n))
    for u in vecs:
        for v in vecs:
            if (inner(V, u, v) == 0) != (inner(V, v, u) == 0):
                return False
    return True


def check_orthosymmetry(ctx):
    universe = [(make_field(2), 2), (make_field(2), 3), (make_field(3), 2), (make_field(2, 2), 2),
                (make_field(2, 2, involution=FROBENIUS_HALF), 2)]
    total = 0
    for F, n in universe:
        for G in la.all_matrices(F, n, n):
            if not la.is_invertible(F, G):
                continue
            V = make_space(F, G)
            total += 1
            if _perp_symmetric(V) != (V.classification.epsilon is not None):
                return False, {"field": F.q, "gram": _jsonable(G)}, {"checked": total}
    return True, None, {"checked": total}


def check_polarity_laws(ctx):
    for e in ctx.grid:
        L = ctx.lattice(e)
        res = check_laws(L, ("modular", "complemented", "galois", "polarity", "involution"))
        bad = [k for k, r in res.items() if not r.passed]
        if bad:
            return False, {"space": e.name, "law": bad[0], "elements": _jsonable(res[bad[0]].witness)}, {}
    return True, None, {"lattices": len(ctx.grid)}


def check_mol_anisotropic(ctx):
    seen = {"anisotropic": 0, "isotropic": 0}
    for e in ctx.grid:
        r = check_laws(ctx.lattice(e), ("ortho",))["ortho"]
        aniso = e.space.classification.anisotropic
        seen["anisotropic" if aniso else "isotropic"] += 1
        if r.passed != aniso or (not r.passed and r.witness is None):
            return False, {"space": e.name}, seen
    return True, None, seen


def check_star_regular(ctx):
    witness = None
    for e in ctx.grid:
        R = MatrixRing(e.space)
        rep = regularity_report(R)
        if not rep.regular or rep.star_regular != e.space.classification.anisotropic:
            return False, {"space": e.name}, {}
        if not rep.proper:
            r = rep.non_proper_witness
            if la.is_zero(r) or not la.is_zero(R.mul(R.star(r), r)):
                return False, {"space": e.name, "bad_witness": _jsonable(r)}, {}
    F4 = make_field(2, 2)
    R = MatrixRing(make_space(F4, la.identity(2)))
    rep = regularity_report(R)
    r = rep.non_proper_witness
    ok = r is not None and not la.is_zero(r) and la.is_zero(R.mul(R.star(r), r))
    witness = _jsonable(r)
    return ok, None if ok else {"gf4_witness": witness}, {"gf4_witness": witness}


def check_alternate_projection(ctx):
    F2, F3 = make_field(2), make_field(3)
    symp = MatrixRing(make_space(F2, ((0, 1), (1, 0))))
    projs = projections(symp)
    if sorted(projs) != sorted([symp.zero(), symp.one()]):
        return False, {"symplectic_projections": _jsonable(projs)}, {}
    rep = regularity_report(MatrixRing(make_space(F3, la.identity(2))))
    if not rep.has_rank1_projection:
        return False, {"gf3": "no rank-1 projection"}, {}
    for e in ctx.grid:
        if regularity_report(MatrixRing(e.space)).has_rank1_projection == e.space.classification.alternate:
            return False, {"space": e.name}, {}
    return True, None, {"gf3_rank1_projection": _jsonable(rep.rank1_projection), "symplectic_projections": 2}


def check_summand_bound(ctx):
    count = 0
    for e in ctx.grid:
        V = e.space
        for W in ctx.lattice(e).subspaces:
            U = extend_to_summand(V, W)
            count += 1
            if not (is_summand(V, U) and is_subspace_of(V.field, W, U) and U.dim <= 2 * W.dim):
                return False, {"space": e.name, "W": W.to_json()}, {"checked": count}
    return True, None, {"checked": count}


def check_ideal_lattice(ctx):
    for e in ctx.grid:
        if not ideal_lattice_check(e.space).ok:
            return False, {"space": e.name}, {}
    return True, None, {"spaces": len(ctx.grid)}


def check_strict_simple(ctx):
    modes = {}
    for e in ctx.grid:
        L = ctx.lattice(e)
        rep = ctx.congruences(L)
        if not (rep.simple and rep.strict_simple):
            return False, {"space": e.name, "congruences": len(rep.all)}, {}
        arg = ctx.arguesian(L)
        modes[arg.mode] = modes.get(arg.mode, 0) + 1
        if not arg.passed:
            return False, {"space": e.name, "arguesian": _jsonable(arg.witness), "seed": arg.seed}, {}
    return True, None, {"arguesian_modes": modes, "seed": ctx.seed}


def _lifting_instances(S, hom, count, rng):
    T = hom.target
    carrier_S = S.carrier()
    carrier_T = T.carrier()
    bad = None
    for _ in range(count):
        c = carrier_S[rng.integers(len(carrier_S))]
        a = hom(c)
        qis = [x for x in carrier_T if T.mul(T.mul(a, x), a) == a]
        b = qis[rng.integers(len(qis))]
        pre = [y for y in carrier_S if hom(y) == b]
        y = pre[rng.integers(len(pre))]
        d = lift_quasi_inverse(hom, a, b, c, y)
        if S.mul(S.mul(c, d), c) != c or hom(d) != b:
            bad = {"c": _jsonable(c), "b": _jsonable(b), "y": _jsonable(y)}
            break
    return bad


def check_lifting(ctx):
    F2, F3 = make_field(2), make_field(3)
    rng = np.random.default_rng(ctx.seed)
    M2_2 = MatrixRing(make_space(F2, la.identity(2)))
    M2_3 = MatrixRing(make_space(F3, la.identity(2)))
    M1_3 = MatrixRing(make_space(F3, la.identity(1)))
    S1 = ProductRing([M2_2, M2_2])
    S2 = ProductRing([M2_3, M1_3])
    half = LIFTING_INSTANCES // 2
    plan = [(S1, projection_hom(S1, 0), half), (S2, projection_hom(S2, 0), LIFTING_INSTANCES - half)]
    for S, hom, k in plan:
        bad = _lifting_instances(S, hom, k, rng)
        if bad:
            return False, bad, {"seed": ctx.seed}
    return True, None, {"instances": LIFTING_INSTANCES, "seed": ctx.seed}


def check_reconstruction(ctx):
    cases = set()
    for e in ctx.grid:
        rec, similar = reconstruction_roundtrip(e.space)
        cases.add(rec.case)
        ok = rec.verified and rec.faithful and rec.space.n == e.space.n
        if e.space.n <= 2:
            ok = ok and similar
        if not ok:
            return False, {"space": e.name, "case": rec.case}, {}
    if not {"projection", "alternate"} <= cases:
        return False, {"cases": sorted(cases)}, {}
    return True, None, {"cases": sorted(cases)}


def check_embeddings(ctx):
    F2, F3 = make_field(2), make_field(3)
    F4 = make_field(2, 2, involution=FROBENIUS_HALF)
    F9 = make_field(3, 2, involution=FROBENIUS_HALF)
    out = {}
    r = lift_ring_embedding(tensorial_embed(make_space(F3, la.identity(2)), field_embedding(F3, F9)))
    out["gf3_to_gf9"] = r.ok
    r = lift_ring_embedding(tensorial_embed(make_space(F2, ((0, 1), (1, 0))), field_embedding(F2, F4)))
    out["gf2_to_gf4"] = r.ok
    V = make_space(F3, ((1,),))
    a = field_embedding(F3, F3)
    j = joint_extension(V, V, a, a)
    out["gf3_joint"] = j.report.ok and j.space.gram == la.identity(2) and j.lattice_emb.target.size == 6
    S = make_space(F2, ((0, 1), (1, 0)))
    a = field_embedding(F2, F2)
    j = joint_extension(S, S, a, a)
    out["symplectic_joint"] = j.report.ok and j.space.classification.alternate
    bad = [k for k, v in out.items() if not v]
    return not bad, {"failed": bad} if bad else None, out


def check_geometry(ctx):
    for e in ctx.grid:
        for G in (geometry_of_space(e.space), geometry_of_lattice(ctx.lattice(e))):
            res = geometry_axiom_check(G)
            bad = {k: _jsonable(v) for k, v in res.items() if v is not None}
            if bad:
                return False, {"space": e.name, "axioms": bad}, {}
        if not geometry_roundtrip(e.space):
            return False, {"space": e.name, "roundtrip": False}, {}
    return True, None, {"spaces": len(ctx.grid)}


def check_negative_controls(ctx):
    n5 = check_laws(pentagon(), ("modular",))["modular"]
    laws = ("galois", "modular", "complemented", "arguesian", "ortho", "polarity")
    res = check_laws(non_polarity_example(), laws)
    failing = [k for k in laws if not res[k].passed]
    ok = not n5.passed and n5.witness is not None and failing == ["polarity"]
    details = {"pentagon_witness": _jsonable(n5.witness), "non_polarity_failing": failing}
    return ok, None if ok else details, details


def check_faithful_family(ctx):
    L = lattice_of_space(make_space(make_field(3), la.identity(2)))
    P = product([L, L])
    p0 = LatticeHom(P, L, product_projection([L, L], 0))
    p1 = LatticeHom(P, L, product_projection([L, L], 1))
    both, first, second = faithful_family([p0, p1]), faithful_family([p0]), faithful_family([p1])
    details = {"pair": both, "first_alone": first, "second_alone": second}
    ok = both and not first and not second
    return ok, None if ok else details, details


CHECKS = [
    ("AC01", "orthosymmetry-iff-epsilon-hermitian", check_orthosymmetry, False),
    ("AC02", "subspace-lattice-polarity-laws", check_polarity_laws, True),
    ("AC03", "ortho-law-iff-anisotropic", check_mol_anisotropic, True),
    ("AC04", "star-regular-iff-anisotropic", check_star_regular, True),
    ("AC05", "alternate-iff-no-rank1-projection", check_alternate_projection, True),
    ("AC06", "summand-extension-bound", check_summand_bound, True),
    ("AC07", "ideal-lattice-isomorphism", check_ideal_lattice, True),
    ("AC08", "strictly-simple-arguesian", check_strict_simple, True),
    ("AC09", "quasi-inverse-lifting", check_lifting, False),
    ("AC10", "space-reconstruction", check_reconstruction, True),
    ("AC11", "extension-embeddings", check_embeddings, False),
    ("AC12", "geometry-axioms-roundtrip", check_geometry, True),
    ("AC13", "negative-controls", check_negative_controls, False),
    ("AC14", "faithful-projection-family", check_faithful_family, False),
]


class SuiteContext:
    """Grid plus per-run caches shared between checks."""

    def __init__(self, grid, seed=0, arguesian_samples=ARGUESIAN_SAMPLES):
        self.grid = grid
        self.seed = seed
        self.arguesian_samples = arguesian_samples
        self._lattices = {}
        self._congruences = {}
        self._arguesian = {}

    def lattice(self, entry):
        key = entry.space
        if key not in self._lattices:
            self._lattices[key] = lattice_of_space(entry.space)
        return self._lattices[key]

    def congruences(self, L):
        k = L.key()
        if k not in self._congruences:
            self._congruences[k] = congruences(L)
        return self._congruences[k]

    def arguesian(self, L):
        # the identity does not involve ', so lattices sharing +, . share the verdict
        k = L.structure_key()
        if k not in self._arguesian:
            self._arguesian[k] = check_laws(
                L, ("arguesian",), seed=self.seed, arguesian_samples=self.arguesian_samples,
                arguesian_exhaustive_limit=ARGUESIAN_EXHAUSTIVE_LIMIT,
            )["arguesian"]
        return self._arguesian[k]


def run_check(check_id, ctx):
    for cid, anchor, fn, _ in CHECKS:
        if cid == check_id:
            t = time.perf_counter()
            passed, witness, details = fn(ctx)
            return CheckRecord(cid, anchor, "pass" if passed else "fail", _jsonable(witness),
                               _jsonable(details), time.perf_counter() - t)
    raise KeyError(check_id)


def run_suite(grid=None, seed=0, only=None, arguesian_samples=ARGUESIAN_SAMPLES):
    from .caps import CapError

    if grid is None:
        grid = default_grid(seed)
    ctx = SuiteContext(grid, seed, arguesian_samples)
    records = []
    for cid, anchor, _, _ in CHECKS:
        if only and cid not in only:
            continue
        try:
            records.append(run_check(cid, ctx))
        except CapError as exc:
            records.append(CheckRecord(cid, anchor, "skipped-cap", None, {"reason": str(exc)}))
    return VerificationReport("acceptance", seed, records)
