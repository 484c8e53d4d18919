"""Finite-dimensional sesquilinear spaces given by Gram matrices.

Convention: vectors are columns and ``<u, v> = u^{*T} G v``, so the form is
semilinear in the left argument and linear in the right one.
"""
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations, product
from typing import Optional

from . import linalg as la
from .caps import check_cap
from .errors import (
    DegenerateSpace,
    DimensionCap,
    EnumerationCap,
    FieldMismatch,
    Infeasible,
    NonSquareGram,
    NotOrthosymmetric,
    ZeroScale,
)
from .field import IDENTITY, InvolutiveField, field_from_json


# -- subspaces ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Subspace:
    """A subspace of F^n stored by its canonical RREF basis (rows)."""

    basis: tuple
    n: int = dc_field(compare=False)

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def sort_key(self):
        return (len(self.basis), self.basis)

    def label(self):
        if not self.basis:
            return "0"
        return "<" + ";".join(",".join(map(str, r)) for r in self.basis) + ">"

    def to_json(self):
        return {"basis": [list(r) for r in self.basis]}


def span(F, vectors, n):
    basis, _ = la.rref(F, [tuple(v) for v in vectors], n)
    return Subspace(basis, n)


def subspace_from_json(F, obj, n):
    return span(F, obj["basis"], n)


def zero_subspace(n):
    return Subspace((), n)


def full_subspace(n):
    return Subspace(la.identity(n), n)


def subspace_sum(F, U, W):
    return span(F, U.basis + W.basis, U.n)


def annihilator(F, U):
    """Rows spanning {y : y . u = 0 for all u in U} (plain dot product)."""
    return la.nullspace(F, U.basis, U.n) if U.basis else list(la.identity(U.n))


def subspace_meet(F, U, W):
    rows = annihilator(F, U) + annihilator(F, W)
    return span(F, la.nullspace(F, rows, U.n) if rows else la.identity(U.n), U.n)


def contains_vector(F, U, v):
    if not any(v):
        return True
    return la.rank(F, U.basis + (tuple(v),)) == U.dim


def is_subspace_of(F, U, W):
    return subspace_sum(F, U, W) == W


def gaussian_binomial(n, r, q):
    if r < 0 or r > n:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def count_subspaces(n, q):
    return sum(gaussian_binomial(n, r, q) for r in range(n + 1))


def enumerate_subspaces(F, n, force_cap=False):
    """Every subspace of F^n once: by dimension, then lexicographic RREF."""
    check_cap("subspaces", count_subspaces(n, F.q), EnumerationCap, force=force_cap)
    out = []
    for r in range(n + 1):
        layer = []
        for pivots in combinations(range(n), r):
            pivot_set = set(pivots)
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivot_set]
            for values in product(range(F.q), repeat=len(free)):
                rows = [[0] * n for _ in range(r)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), x in zip(free, values):
                    rows[i][j] = x
                layer.append(tuple(tuple(row) for row in rows))
        layer.sort()
        out.extend(Subspace(b, n) for b in layer)
    return out


# -- spaces ------------------------------------------------------------------

@dataclass(frozen=True)
class SpaceClass:
    nondegenerate: bool
    epsilon: Optional[int]
    hermitian: bool
    skew_symmetric: bool
    alternate: Optional[bool]
    anisotropic: Optional[bool]
    orthosymmetric: Optional[bool]

    def to_json(self):
        return dict(self.__dict__)


@dataclass(frozen=True, eq=False)
class GramSpace:
    field: InvolutiveField
    gram: tuple

    @property
    def n(self):
        return len(self.gram)

    @cached_property
    def classification(self):
        return classify(self)

    @cached_property
    def gram_inverse(self):
        return la.inverse(self.field, self.gram)

    @property
    def nondegenerate(self):
        return self.classification.nondegenerate

    def __eq__(self, other):
        return isinstance(other, GramSpace) and self.field == other.field and self.gram == other.gram

    def __hash__(self):
        return hash((self.field, self.gram))

    def __repr__(self):
        return f"GramSpace({self.field!r}, {self.gram})"

    def to_json(self):
        return {"field": self.field.to_json(), "dim": self.n, "gram": [list(r) for r in self.gram]}


def make_space(field, gram, force_cap=False):
    gram = tuple(tuple(int(x) for x in row) for row in gram)
    n = len(gram)
    if any(len(row) != n for row in gram):
        raise NonSquareGram(f"gram matrix is not square: {gram}")
    check_cap("dimension", n, DimensionCap, force=force_cap)
    for row in gram:
        for x in row:
            if not 0 <= x < field.q:
                raise ValueError(f"invalid element code {x}")
    space = GramSpace(field, gram)
    space.classification  # eager
    return space


def space_from_json(obj, force_cap=False):
    F = field_from_json(obj["field"])
    gram = obj["gram"]
    if "dim" in obj and obj["dim"] != len(gram):
        raise NonSquareGram("dim does not match gram size")
    return make_space(F, gram, force_cap=force_cap)


def inner(space, u, v):
    F, G, n = space.field, space.gram, space.n
    la.check_length(u, n)
    la.check_length(v, n)
    s, add, mul = F.star_table, F.add, F.mul
    acc = 0
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = G[i]
        t = 0
        for gij, vj in zip(row, v):
            if gij and vj:
                t = add(t, mul(gij, vj))
        if t:
            acc = add(acc, mul(s[ui], t))
    return acc


def left_functional(space, u):
    """Row r with <u, v> = r . v for every v."""
    F = space.field
    us = tuple(F.star(x) for x in u)
    return la.mat_mul(F, (us,), space.gram)[0] if space.n else ()


def _epsilon(F, G):
    n = len(G)
    eps = None
    for i in range(n):
        for j in range(n):
            if G[i][j]:
                eps = F.div(G[j][i], F.star(G[i][j]))
                break
        if eps is not None:
            break
    if eps is None:
        return None
    for i in range(n):
        for j in range(n):
            if G[j][i] != F.mul(eps, F.star(G[i][j])):
                return None
    return eps


def _orthosymmetric_pairs(space, vectors):
    for u in vectors:
        for v in vectors:
            if (inner(space, u, v) == 0) != (inner(space, v, u) == 0):
                return False
    return True


def _orthosymmetric_functionals(space, vectors):
    # <u,v> = 0 iff <v,u> = 0 for all v  <=>  the linear functionals
    # v -> <u,v> and v -> <v,u>^* have the same kernel, i.e. are proportional
    F = space.field
    GsT = la.star_transpose(F, space.gram)
    for u in vectors:
        a = left_functional(space, u)
        us = tuple(F.star(x) for x in u)
        b = la.mat_mul(F, (us,), GsT)[0]
        if la.rank(F, (a, b)) == 2 or (any(a) != any(b)):
            return False
    return True


def classify(space):
    F, G, n = space.field, space.gram, space.n
    nondeg = la.is_invertible(F, G) if n else True
    eps = _epsilon(F, G)
    alternate = anisotropic = ortho = None
    if F.q**n <= 2**20:
        vectors = list(la.all_vectors(F, n))
        norms = [inner(space, v, v) for v in vectors[1:]]
        alternate = not any(norms)
        anisotropic = all(norms)
        if F.q ** (2 * n) <= 2**20:
            ortho = _orthosymmetric_pairs(space, vectors)
        else:
            ortho = _orthosymmetric_functionals(space, vectors)
    minus_one = F.neg(1)
    return SpaceClass(
        nondegenerate=nondeg,
        epsilon=eps,
        hermitian=eps == 1,
        skew_symmetric=eps == minus_one and F.involution == IDENTITY,
        alternate=alternate,
        anisotropic=anisotropic,
        orthosymmetric=ortho,
    )


def _require_nondegenerate(space):
    if not space.classification.nondegenerate:
        raise DegenerateSpace("operation requires a non-degenerate space")


def _require_orthosymmetric(space):
    if space.classification.orthosymmetric is False:
        raise NotOrthosymmetric("operation requires an orthosymmetric space")


def orthogonal(space, U):
    """U^perp = {v : <u, v> = 0 for all u in U}."""
    _require_nondegenerate(space)
    F, n = space.field, space.n
    if U.is_zero():
        return full_subspace(n)
    rows = [left_functional(space, u) for u in U.basis]
    return span(F, la.nullspace(F, rows, n), n)


def radical(space, U):
    return subspace_meet(space.field, U, orthogonal(space, U))


def radical_report(space, U):
    rad = radical(space, U)
    closed = orthogonal(space, orthogonal(space, U)) == U
    return {"radical": rad, "closed": closed, "summand": rad.is_zero()}


def is_summand(space, U):
    return radical(space, U).is_zero()


def extend_to_summand(space, W):
    """Smallest-effort summand containing ``W``; dim grows by at most dim W."""
    _require_nondegenerate(space)
    _require_orthosymmetric(space)
    F, n = space.field, space.n
    U = W
    while True:
        rad = radical(space, U)
        if rad.is_zero():
            return U
        v = rad.basis[0]
        for w in la.all_vectors(F, n):
            if inner(space, v, w):
                break
        else:  # pragma: no cover - excluded by non-degeneracy
            raise DegenerateSpace("no vector pairs with a radical vector")
        U = span(F, U.basis + (w,), n)


def subquotient(space, U):
    """The non-degenerate space U / rad U, realised on a complement of rad U in U."""
    _require_nondegenerate(space)
    _require_orthosymmetric(space)
    F = space.field
    rad = radical(space, U)
    current = list(rad.basis)
    complement = []
    r = len(current)
    for u in U.basis:
        if la.rank(F, current + [u]) > r:
            current.append(u)
            complement.append(u)
            r += 1
    gram = tuple(tuple(inner(space, a, b) for b in complement) for a in complement)
    return make_space(F, gram)


def scale(space, mu):
    if mu == 0:
        raise ZeroScale("scaling factor must be nonzero")
    return make_space(space.field, la.mat_scale(space.field, mu, space.gram))


def orthogonal_sum(A, B):
    if A.field != B.field:
        raise FieldMismatch(f"{A.field!r} != {B.field!r}")
    n, m = A.n, B.n
    gram = [tuple(A.gram[i]) + (0,) * m for i in range(n)]
    gram += [(0,) * n + tuple(B.gram[j]) for j in range(m)]
    return make_space(A.field, gram)


def invertible_matrices(F, n):
    for T in la.all_matrices(F, n, n):
        if la.is_invertible(F, T):
            yield T


def congruent_gram(F, G, T):
    """T^{*T} G T, the Gram matrix of G in the basis given by T's columns."""
    return la.mat_mul(F, la.mat_mul(F, la.star_transpose(F, T, len(G)), G), T)


def find_similitude(A, B, force_cap=False):
    """Return ``(T, mu)`` with G_B = mu T^{*T} G_A T, or ``None``."""
    if A.field != B.field:
        raise FieldMismatch("similarity search is restricted to one field")
    if A.n != B.n:
        return None
    F, n = A.field, A.n
    if n == 0:
        return ((), 1)
    check_cap("similarity_search", F.q ** (n * n), Infeasible, force=force_cap)
    GB = B.gram
    i0, j0 = next(((i, j) for i in range(n) for j in range(n) if GB[i][j]), (None, None))
    for T in invertible_matrices(F, n):
        M = congruent_gram(F, A.gram, T)
        if i0 is None:
            if la.is_zero(M):
                return (T, 1)
            continue
        if not M[i0][j0]:
            continue
        mu = F.div(GB[i0][j0], M[i0][j0])
        if la.mat_scale(F, mu, M) == GB:
            return (T, mu)
    return None


def is_similar(A, B, force_cap=False):
    return find_similitude(A, B, force_cap) is not None


class SubspaceAlgebra:
    """Subspace operations of F^n used to build the subspace lattice."""

    def __init__(self, space, force_cap=False):
        self.space = space
        self.field = space.field
        self.n = space.n
        self.force_cap = force_cap

    def sum(self, U, W):
        return subspace_sum(self.field, U, W)

    def meet(self, U, W):
        return subspace_meet(self.field, U, W)

    def contains(self, U, v):
        return contains_vector(self.field, U, v)

    def span(self, vectors):
        return span(self.field, vectors, self.n)

    def enumerate_all(self):
        return enumerate_subspaces(self.field, self.n, self.force_cap)


def subspace_algebra(space, force_cap=False):
    return SubspaceAlgebra(space, force_cap)
