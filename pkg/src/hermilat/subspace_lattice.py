"""Subspace lattices of spaces and rings, orthogeometries, and the maps between them."""
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import linalg as la
from .errors import DegenerateSpace, NotAtomic, NotOrthosymmetric, NotRegular
from .lattice import (
    FiniteGaloisLattice,
    LatticeHom,
    check_laws,
    galois_closure_set,
    is_isomorphism,
    sublattice,
)
from .ring import MatrixRing, idempotent_generator
from .space import enumerate_subspaces, orthogonal, span, subspace_sum, is_subspace_of


def _require_lattice_space(space):
    c = space.classification
    if not c.nondegenerate:
        raise DegenerateSpace("subspace lattice needs a non-degenerate space")
    if c.orthosymmetric is False:
        raise NotOrthosymmetric("subspace lattice needs an orthosymmetric space")


def lattice_of_space(space, force_cap=False):
    """All subspaces ordered by inclusion, with U' = U^perp.

    The returned lattice carries the subspace list as ``L.subspaces``.
    """
    _require_lattice_space(space)
    F, n = space.field, space.n
    subs = enumerate_subspaces(F, n, force_cap)
    index = {U.basis: i for i, U in enumerate(subs)}
    m = len(subs)
    join = np.empty((m, m), dtype=np.int64)
    for i, U in enumerate(subs):
        join[i, i] = i
        for j in range(i + 1, m):
            k = index[subspace_sum(F, U, subs[j]).basis]
            join[i, j] = join[j, i] = k
    prime = [index[orthogonal(space, U).basis] for U in subs]
    L = FiniteGaloisLattice.from_join_table(join, prime, [U.label() for U in subs])
    L.subspaces = subs
    L.index = index
    return L


# -- lattice of principal right ideals ------------------------------------------

def _column_generator(U, n):
    cols = list(U.basis) + [(0,) * n] * (n - U.dim)
    return tuple(tuple(c[i] for c in cols) for i in range(n))


def lattice_of_ring(ring, force_cap=False):
    """Principal right ideals ordered by inclusion with eR -> (1 - e*)R.

    Returns the lattice; ``L.generators[i]`` is an element generating ideal i.
    """
    if isinstance(ring, MatrixRing):
        return _matrix_ring_lattice(ring, force_cap)
    return _enumerated_ring_lattice(ring)


def _matrix_ring_lattice(ring, force_cap):
    space, F, n = ring.space, ring.field, ring.n
    subs = enumerate_subspaces(F, n, force_cap)
    index = {U.basis: i for i, U in enumerate(subs)}
    gens = [_column_generator(U, n) for U in subs]
    idem = [idempotent_generator(ring, a) for a in gens]
    m = len(subs)
    leq = np.zeros((m, m), dtype=bool)
    # aR <= bR  iff  e_b a = a
    for j in range(m):
        for i in range(m):
            leq[i, j] = ring.mul(idem[j], gens[i]) == gens[i]
    one = ring.one()
    prime = []
    for i in range(m):
        f = ring.sub(one, ring.star(idem[i]))
        k = index[ring.image(f).basis]
        # fR = a_k R, checked in the ring: e_k f = f and f a_k = a_k
        if ring.mul(idem[k], f) != f or ring.mul(f, gens[k]) != gens[k]:
            raise NotRegular("image correspondence failed for (1 - e*)R")
        prime.append(k)
    L = FiniteGaloisLattice.from_order(leq, prime, [f"{U.label()}R" for U in subs])
    L.generators = gens
    return L


def _enumerated_ring_lattice(ring):
    carrier = ring.carrier()
    ideals = {}
    for a in carrier:
        I = ring.right_ideal(a)
        ideals.setdefault(I, a)
    items = sorted(ideals.items(), key=lambda kv: (len(kv[0]), carrier.index(kv[1])))
    pos = {I: i for i, (I, _) in enumerate(items)}
    m = len(items)
    leq = np.array([[A <= B for B, _ in items] for A, _ in items], dtype=bool)
    one = ring.one()
    prime = []
    for I, a in items:
        try:
            e = idempotent_generator(ring, a)
        except Exception as exc:
            raise NotRegular(f"element without quasi-inverse: {a!r}") from exc
        f = ring.sub(one, ring.star(e))
        prime.append(pos[ring.right_ideal(f)])
    L = FiniteGaloisLattice.from_order(leq, prime, [f"I{i}" for i in range(m)])
    L.generators = [a for _, a in items]
    return L


@dataclass
class IdealLatticeResult:
    iso: LatticeHom
    ok: bool


def ideal_lattice_check(space, force_cap=False):
    """Verify aR -> im(a) is a Galois-lattice isomorphism L(End V) -> L(V)."""
    LV = lattice_of_space(space, force_cap)
    ring = MatrixRing(space)
    LR = lattice_of_ring(ring, force_cap)
    eta = [LV.index[ring.image(a).basis] for a in LR.generators]
    phi = LatticeHom(LR, LV, eta)
    return IdealLatticeResult(phi, is_isomorphism(phi, galois=True))


# -- orthogeometries ------------------------------------------------------------

@dataclass
class Orthogeometry:
    points: list
    collinear: np.ndarray  # bool [P, P, P]
    perp: np.ndarray  # bool [P, P]

    @property
    def size(self):
        return len(self.points)

    def triples(self):
        return [tuple(map(int, t)) for t in np.argwhere(self.collinear)]

    def to_json(self):
        pts = [p.to_json() if hasattr(p, "to_json") else p for p in self.points]
        return {
            "points": pts,
            "collinear": [list(t) for t in self.triples() if t[0] < t[1] < t[2]],
            "perp": [[int(i), int(j)] for i, j in np.argwhere(self.perp) if i <= j],
        }


def geometry_of_space(space):
    """Projective points vF with collinearity p <= q + r and vF perp wF iff <v, w> = 0."""
    _require_lattice_space(space)
    from .space import inner

    F, n = space.field, space.n
    pts = [U for U in enumerate_subspaces(F, n) if U.dim == 1]
    P = len(pts)
    coll = np.zeros((P, P, P), dtype=bool)
    for q in range(P):
        for r in range(q + 1, P):
            line = subspace_sum(F, pts[q], pts[r])
            for p in range(P):
                if p != q and p != r and is_subspace_of(F, pts[p], line):
                    coll[p, q, r] = coll[p, r, q] = True
    perp = np.array([[inner(space, a.basis[0], b.basis[0]) == 0 for b in pts] for a in pts], dtype=bool)
    return Orthogeometry(pts, coll, perp)


def geometry_of_lattice(L):
    """Atoms of L, with p, q, r collinear iff distinct and p <= q + r; p perp q iff p <= q'."""
    if not L.is_atomic():
        raise NotAtomic("lattice is not atomic")
    atoms = L.atoms()
    P = len(atoms)
    J, leq = L.join, L.leq
    coll = np.zeros((P, P, P), dtype=bool)
    for a in range(P):
        for b in range(P):
            for c in range(P):
                if len({a, b, c}) == 3:
                    coll[a, b, c] = leq[atoms[a], J[atoms[b], atoms[c]]]
    perp = np.array([[leq[p, L.prime[q]] for q in atoms] for p in atoms], dtype=bool)
    return Orthogeometry([L.labels[p] for p in atoms], coll, perp)


def geometry_axiom_check(G):
    """Projective-space, orthogeometry and polarity axioms; ``{axiom: witness or None}``."""
    C, perp, P = G.collinear, G.perp, G.size
    trip = G.triples()
    out = {}

    def first(gen):
        return next(gen, None)

    out["collinearity_symmetric_distinct"] = first(
        t for t in trip
        if len(set(t)) < 3 or not all(C[t[i], t[j], t[k]] for i, j, k in
                                      ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)))
    )
    by_pair = {}
    for p0, p1, a in trip:
        by_pair.setdefault((p0, p1), []).append(a)
    out["line_transitivity"] = first(
        (p0, p1, a, b) for (p0, p1), rest in by_pair.items()
        for a in rest for b in rest if a != b and not C[p0, a, b]
    )
    by_first = {}
    for p, a, b in trip:
        by_first.setdefault(p, []).append((a, b))

    def pasch():
        for p, pairs in by_first.items():
            for a, b in pairs:
                for c, d in pairs:
                    if a != c and b != d and not (C[:, a, c] & C[:, b, d]).any():
                        yield (p, a, b, c, d)

    out["pasch"] = first(pasch())
    out["perp_symmetric"] = first((int(i), int(j)) for i, j in np.argwhere(perp & ~perp.T))

    def ortho_a():
        for p in range(P):
            for q, r, s in trip:
                if perp[p, q] and perp[p, r] and not perp[p, s]:
                    yield (p, q, r, s)

    out["ortho_linear"] = first(ortho_a())
    out["ortho_nondegenerate"] = first((p,) for p in range(P) if perp[p].all())

    def polarity():
        for p in range(P):
            for q in range(P):
                if p == q:
                    continue
                line = C[p, q] | (np.arange(P) == p) | (np.arange(P) == q)
                for r in range(P):
                    if not (perp[r] & line).any():
                        yield (p, q, r)

    out["polarity"] = first(polarity())
    return out


def geometry_closure(G, X):
    X = set(X)
    C = G.collinear
    changed = True
    while changed:
        changed = False
        for p in list(X):
            for q in list(X):
                if p != q:
                    for r in np.flatnonzero(C[p, q]):
                        if int(r) not in X:
                            X.add(int(r))
                            changed = True
    return frozenset(X)


def geometry_subspaces(G):
    start = geometry_closure(G, ())
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for X in frontier:
            for p in range(G.size):
                if p not in X:
                    Y = geometry_closure(G, X | {p})
                    if Y not in found:
                        found.add(Y)
                        nxt.append(Y)
        frontier = nxt
    return sorted(found, key=lambda X: (len(X), sorted(X)))


def geometry_orthogonal(G, X):
    return frozenset(q for q in range(G.size) if all(G.perp[q, p] for p in X))


def lattice_of_geometry(G):
    """Subspaces of the geometry with X' = X^perp."""
    subs = geometry_subspaces(G)
    pos = {X: i for i, X in enumerate(subs)}
    leq = np.array([[A <= B for B in subs] for A in subs], dtype=bool)
    prime = [pos[geometry_orthogonal(G, X)] for X in subs]
    L = FiniteGaloisLattice.from_order(leq, prime, ["{" + ",".join(map(str, sorted(X))) + "}" for X in subs])
    L.point_sets = subs
    return L


def atoms_below_map(L, G_lattice):
    atoms = L.atoms()
    pos = {X: i for i, X in enumerate(G_lattice.point_sets)}
    out = []
    for a in range(L.size):
        X = frozenset(i for i, p in enumerate(atoms) if L.leq[p, a])
        out.append(pos.get(X))
    return out


def geometry_roundtrip(space, force_cap=False):
    """L(V) -> geometry of its atoms -> lattice of that geometry, checked isomorphic."""
    L = lattice_of_space(space, force_cap)
    G = geometry_of_lattice(L)
    LG = lattice_of_geometry(G)
    f = atoms_below_map(L, LG)
    if any(x is None for x in f):
        return False
    return is_isomorphism(LatticeHom(L, LG, f), galois=True)


def geometry_representation_check(L):
    """a -> {atoms below a} is injective, order-reflecting and sends a' to its orthogonal."""
    G = geometry_of_lattice(L)
    atoms = L.atoms()
    sets = [frozenset(i for i, p in enumerate(atoms) if L.leq[p, a]) for a in range(L.size)]
    if len(set(sets)) != L.size:
        return False
    for a in range(L.size):
        for b in range(L.size):
            if bool(L.leq[a, b]) != (sets[a] <= sets[b]):
                return False
        if sets[int(L.prime[a])] != geometry_orthogonal(G, sets[a]):
            return False
    return True


# -- open-problem harness -------------------------------------------------------

@dataclass
class PolaritySearchResult:
    counterexample: object  # sorted element list of the offending subalgebra, or None
    generators: tuple
    tried: int
    complemented_seen: int
    exhausted: bool  # every generator set was tried

    def to_json(self):
        return {
            "counterexample": self.counterexample,
            "generators": list(self.generators) if self.generators else None,
            "tried": self.tried,
            "complemented_seen": self.complemented_seen,
            "exhausted": self.exhausted,
        }


def polarity_subalgebra_search(space, budget, max_generators=3, force_cap=False):
    """Look for a complemented Galois subalgebra of L(V) that is not a polarity lattice."""
    L = lattice_of_space(space, force_cap)
    tried = seen_comp = 0
    cache = {}
    for r in range(max_generators + 1):
        for gens in combinations(range(L.size), r):
            if tried >= budget:
                return PolaritySearchResult(None, None, tried, seen_comp, False)
            tried += 1
            S = tuple(galois_closure_set(L, gens))
            if S in cache:
                continue
            sub = sublattice(L, S)
            res = check_laws(sub, ("complemented", "polarity"))
            cache[S] = res
            if res["complemented"].passed:
                seen_comp += 1
                if not res["polarity"].passed:
                    return PolaritySearchResult(list(S), gens, tried, seen_comp, False)
    return PolaritySearchResult(None, None, tried, seen_comp, True)
