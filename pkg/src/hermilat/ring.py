"""Finite *-rings: adjoint-closed matrix rings, finite products, generated *-subrings.

The matrix ring of a non-degenerate space ``V`` is End(V) with the adjoint
``A* = G^{-1} A^{*T} G`` as involution; it is never materialised unless a
caller asks for its carrier.  Products and generated subrings are always
enumerated.
"""
from dataclasses import dataclass
from itertools import product
from typing import Callable

from . import linalg as la
from .caps import check_cap
from .errors import (
    BadIdempotent,
    DegenerateSpace,
    EnumerationCap,
    KernelNotRegular,
    NotAHom,
    NotASummand,
    NotRegularElement,
    NotStarRegular,
    PreimageMismatch,
    RankNotOne,
)
from .space import (
    GramSpace,
    Subspace,
    is_summand,
    is_similar,
    make_space,
    span,
)


def adjoint(space, A):
    """The unique A* with <Au, v> = <u, A*v>."""
    if not space.classification.nondegenerate:
        raise DegenerateSpace("adjoints need a non-degenerate space")
    F, G = space.field, space.gram
    return la.mat_mul(F, la.mat_mul(F, space.gram_inverse, la.star_transpose(F, A, space.n)), G)


class StarRing:
    """Common interface; subclasses provide the operations and the carrier."""

    enumerable = True

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def elements(self):
        raise EnumerationCap(f"{self!r} has no enumerable carrier")

    def carrier(self):
        return list(self.elements())

    def right_ideal(self, a):
        return frozenset(self.mul(a, r) for r in self.elements())

    def is_idempotent(self, e):
        return self.mul(e, e) == e

    def is_projection(self, e):
        return self.is_idempotent(e) and self.star(e) == e

    def quasi_inverse(self, a):
        for x in self.elements():
            if self.mul(self.mul(a, x), a) == a:
                return x
        raise NotRegularElement(f"no quasi-inverse for {a!r}")


class MatrixRing(StarRing):
    """End(V) for a non-degenerate space V, involution = adjoint."""

    def __init__(self, space, force_cap=False):
        if not space.classification.nondegenerate:
            raise DegenerateSpace("matrix *-ring needs a non-degenerate space")
        self.space = space
        self.field = space.field
        self.n = space.n
        self.char = self.field.p
        self.size = self.field.q ** (self.n * self.n)
        self.enumerable = self.size <= 2**20 or force_cap
        self._zero = la.zeros(self.n, self.n)
        self._one = la.identity(self.n)

    def __repr__(self):
        return f"MatrixRing({self.space!r})"

    def __eq__(self, other):
        return isinstance(other, MatrixRing) and self.space == other.space

    def __hash__(self):
        return hash(("M", self.space))

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def add(self, a, b):
        return la.mat_add(self.field, a, b)

    def neg(self, a):
        return la.mat_neg(self.field, a)

    def sub(self, a, b):
        return la.mat_sub(self.field, a, b)

    def mul(self, a, b):
        return la.mat_mul(self.field, a, b)

    def star(self, a):
        return adjoint(self.space, a)

    def scalar(self, lam, a):
        return la.mat_scale(self.field, self.field.from_int(lam), a)

    def elements(self):
        check_cap("carrier", self.size, EnumerationCap, force=self.enumerable)
        return la.all_matrices(self.field, self.n, self.n)

    def rank(self, a):
        return la.rank(self.field, a)

    def image(self, a):
        return span(self.field, la.transpose(a, self.n), self.n)

    def quasi_inverse(self, a):
        """C^R B^L from a rank factorisation a = B C."""
        F, n = self.field, self.n
        C, pivots = la.rref(F, a, n)
        r = len(pivots)
        if r == 0:
            return self._zero
        # B: pivot columns of a (n x r), full column rank
        B = tuple(tuple(row[p] for p in pivots) for row in a)
        rows, _ = _independent_rows(F, B)
        Binv = la.inverse(F, tuple(B[i] for i in rows))
        BL = [[0] * n for _ in range(r)]
        for jj, i in enumerate(rows):
            for k in range(r):
                BL[k][i] = Binv[k][jj]
        # C is in RREF so its pivot columns form the identity
        CR = [[0] * r for _ in range(n)]
        for k, p in enumerate(pivots):
            CR[p][k] = 1
        return la.mat_mul(F, tuple(map(tuple, CR)), tuple(map(tuple, BL)))

    def rank_one_matrices(self, force_cap=False):
        """Every rank-1 matrix v w^T exactly once (v normalised to leading 1)."""
        F, n = self.field, self.n
        check_cap("rank1_scan", F.q ** (2 * n), EnumerationCap, force=force_cap)
        for v in la.all_vectors(F, n):
            lead = next((x for x in v if x), None)
            if lead != 1:
                continue
            for w in la.all_vectors(F, n):
                if any(w):
                    yield tuple(tuple(F.mul(vi, wj) for wj in w) for vi in v)


def _independent_rows(F, M):
    chosen, rows = [], []
    for i, row in enumerate(M):
        if la.rank(F, rows + [row]) > len(rows):
            rows.append(row)
            chosen.append(i)
    return chosen, rows


class ProductRing(StarRing):
    """Direct product with componentwise operations."""

    def __init__(self, rings, force_cap=False):
        self.rings = list(rings)
        self.char = self.rings[0].char
        self.size = 1
        for R in self.rings:
            self.size *= R.size
        check_cap("carrier", self.size, EnumerationCap, force=force_cap)

    def __repr__(self):
        return f"ProductRing({self.rings!r})"

    def zero(self):
        return tuple(R.zero() for R in self.rings)

    def one(self):
        return tuple(R.one() for R in self.rings)

    def add(self, a, b):
        return tuple(R.add(x, y) for R, x, y in zip(self.rings, a, b))

    def neg(self, a):
        return tuple(R.neg(x) for R, x in zip(self.rings, a))

    def mul(self, a, b):
        return tuple(R.mul(x, y) for R, x, y in zip(self.rings, a, b))

    def star(self, a):
        return tuple(R.star(x) for R, x in zip(self.rings, a))

    def scalar(self, lam, a):
        return tuple(R.scalar(lam, x) for R, x in zip(self.rings, a))

    def elements(self):
        return product(*[list(R.elements()) for R in self.rings])


class GeneratedSubring(StarRing):
    """Least subset containing the generators, 0 and 1, closed under +, . and *."""

    def __init__(self, parent, generators, force_cap=False):
        self.parent = parent
        self.char = parent.char
        gens = [parent.zero(), parent.one()] + list(generators)
        S = set(gens)
        S |= {parent.star(g) for g in gens}
        frontier = list(S)
        while frontier:
            new = set()
            for x in frontier:
                cands = [parent.star(x), parent.neg(x)]
                for y in S:
                    cands += [parent.add(x, y), parent.mul(x, y), parent.mul(y, x)]
                for c in cands:
                    if c not in S:
                        new.add(c)
            S |= new
            check_cap("carrier", len(S), EnumerationCap, force=force_cap)
            frontier = list(new)
        self._carrier = sorted(S)
        self.size = len(S)

    def __repr__(self):
        return f"GeneratedSubring(size={self.size})"

    def zero(self):
        return self.parent.zero()

    def one(self):
        return self.parent.one()

    def add(self, a, b):
        return self.parent.add(a, b)

    def neg(self, a):
        return self.parent.neg(a)

    def mul(self, a, b):
        return self.parent.mul(a, b)

    def star(self, a):
        return self.parent.star(a)

    def scalar(self, lam, a):
        return self.parent.scalar(lam, a)

    def elements(self):
        return iter(self._carrier)

    def __contains__(self, a):
        return a in set(self._carrier)


def product_ring(rings, force_cap=False):
    return ProductRing(rings, force_cap)


def generated_subring(ring, generators, force_cap=False):
    return GeneratedSubring(ring, generators, force_cap)


# -- regularity calculus ----------------------------------------------------

def quasi_inverse(ring, a):
    """Some x with a x a = a (deterministic per ring variant)."""
    return ring.quasi_inverse(a)


def idempotent_generator(ring, a):
    """Idempotent e = a x with eR = aR."""
    x = ring.quasi_inverse(a)
    return ring.mul(a, x)


def orthogonal_projection(space, U):
    """pi with pi^2 = pi = pi*, im pi = U and ker pi = U^perp."""
    F, n = space.field, space.n
    if U.is_zero():
        return la.zeros(n, n)
    if not is_summand(space, U):
        raise NotASummand(f"{U.label()} meets its orthogonal")
    B = la.transpose(U.basis)  # n x r, columns = basis
    BsT = la.star_transpose(F, B, U.dim)  # r x n
    M = la.mat_mul(F, la.mat_mul(F, BsT, space.gram), B)
    return la.mat_mul(F, la.mat_mul(F, la.mat_mul(F, B, la.inverse(F, M)), BsT), space.gram)


def projection_generator(ring, a):
    """The projection e with eR = aR (*-regular situation)."""
    if isinstance(ring, MatrixRing):
        U = ring.image(a)
        if not is_summand(ring.space, U):
            raise NotStarRegular(f"image {U.label()} of the element is not an orthogonal summand")
        return orthogonal_projection(ring.space, U)
    aR = ring.right_ideal(a)
    for e in ring.elements():
        if ring.is_projection(e) and e in aR and ring.mul(e, a) == a:
            return e
    raise NotStarRegular("no projection generates the right ideal")


def common_left_unit(ring, a, b):
    """Idempotent e in aR + bR with ea = a and eb = b."""
    e1 = idempotent_generator(ring, a)
    b1 = ring.sub(b, ring.mul(e1, b))
    f = idempotent_generator(ring, b1)  # of the form b1 x, so e1 f = 0
    return ring.sub(ring.add(e1, f), ring.mul(f, e1))


@dataclass
class RegularityReport:
    regular: bool
    proper: bool
    star_regular: bool
    has_rank1_projection: bool
    non_proper_witness: object = None
    rank1_projection: object = None
    irregular_witness: object = None

    def to_json(self):
        def enc(x):
            return None if x is None else _to_list(x)

        return {
            "regular": self.regular,
            "proper": self.proper,
            "star_regular": self.star_regular,
            "has_rank1_projection": self.has_rank1_projection,
            "non_proper_witness": enc(self.non_proper_witness),
            "rank1_projection": enc(self.rank1_projection),
            "irregular_witness": enc(self.irregular_witness),
        }


def _to_list(x):
    if isinstance(x, tuple):
        return [_to_list(y) for y in x]
    return x


def regularity_report(ring, force_cap=False):
    if isinstance(ring, MatrixRing):
        return _matrix_regularity(ring, force_cap)
    carrier = ring.carrier()
    irregular = None
    for a in carrier:
        try:
            ring.quasi_inverse(a)
        except NotRegularElement:
            irregular = a
            break
    zero = ring.zero()
    non_proper = next((r for r in carrier if r != zero and ring.mul(ring.star(r), r) == zero), None)
    rank1 = None
    for e in carrier:
        if e != zero and ring.is_projection(e) and _minimal_right_ideal(ring, e, carrier):
            rank1 = e
            break
    regular, proper = irregular is None, non_proper is None
    return RegularityReport(regular, proper, regular and proper, rank1 is not None, non_proper, rank1, irregular)


def _minimal_right_ideal(ring, e, carrier):
    eR = ring.right_ideal(e)
    zero = ring.zero()
    return all(x == zero or ring.right_ideal(x) == eR for x in eR)


def _matrix_regularity(ring, force_cap=False):
    # A nonzero r with r*r = 0 yields the rank-1 r p (p a matrix unit with
    # r p != 0) with the same property, so scanning rank-1 matrices decides
    # properness; a rank-1 matrix generates a minimal right ideal.
    non_proper = rank1 = irregular = None
    zero = ring.zero()
    for r in ring.rank_one_matrices(force_cap):
        x = ring.quasi_inverse(r)
        if irregular is None and ring.mul(ring.mul(r, x), r) != r:
            irregular = r
        rs = ring.star(r)
        if non_proper is None and ring.mul(rs, r) == zero:
            non_proper = r
        if rank1 is None and rs == r and ring.is_idempotent(r):
            rank1 = r
    regular = irregular is None
    proper = non_proper is None
    return RegularityReport(regular, proper, regular and proper, rank1 is not None, non_proper, rank1, irregular)


def projections(ring):
    """All projections e = e^2 = e* of an enumerable ring, in carrier order."""
    return [e for e in ring.elements() if ring.is_projection(e)]


# -- homomorphisms ------------------------------------------------------------

@dataclass
class RingHom:
    source: StarRing
    target: StarRing
    fn: Callable

    def __call__(self, r):
        return self.fn(r)

    def kernel_elements(self):
        z = self.target.zero()
        return [r for r in self.source.elements() if self.fn(r) == z]


def projection_hom(prod, component):
    return RingHom(prod, prod.rings[component], lambda r: r[component])


def identity_hom(ring):
    return RingHom(ring, ring, lambda r: r)


def hom_violation(hom, elements=None, pair_elements=None):
    """First failed preservation law, or ``None``.

    ``elements`` drive the unary checks and ``pair_elements`` the binary
    ones; both default to the whole carrier.
    """
    S, T, f = hom.source, hom.target, hom.fn
    elements = list(S.elements()) if elements is None else list(elements)
    pair_elements = elements if pair_elements is None else list(pair_elements)
    if f(S.one()) != T.one():
        return ("one",)
    if f(S.zero()) != T.zero():
        return ("zero",)
    images = {}
    for a in elements:
        fa = f(a)
        images[a] = fa
        if f(S.star(a)) != T.star(fa):
            return ("star", a)
        for lam in range(min(S.char, 5)):
            if f(S.scalar(lam, a)) != T.scalar(lam, fa):
                return ("scalar", a, lam)
    for a in pair_elements:
        fa = images.get(a) or f(a)
        for b in pair_elements:
            fb = images.get(b) or f(b)
            if f(S.add(a, b)) != T.add(fa, fb):
                return ("add", a, b)
            if f(S.mul(a, b)) != T.mul(fa, fb):
                return ("mul", a, b)
    return None


def hom_check(hom, elements=None, pair_elements=None):
    w = hom_violation(hom, elements, pair_elements)
    if w is not None:
        raise NotAHom(f"not a *-ring homomorphism: {w[0]}", w)
    kernel = hom.kernel_elements() if hom.source.enumerable else None
    return {
        "is_star_hom": True,
        "kernel": kernel,
        "injective": None if kernel is None else len(kernel) == 1,
    }


def lift_quasi_inverse(hom, a, b, c, y):
    """Lift a quasi-inverse b of a = hom(c) to d with c d c = c and hom(d) = b."""
    S, T = hom.source, hom.target
    if T.mul(T.mul(a, b), a) != a:
        raise PreimageMismatch("b is not a quasi-inverse of a")
    if hom(c) != a or hom(y) != b:
        raise PreimageMismatch("c or y does not map to a or b")
    kernel = hom.kernel_elements()
    t = S.sub(c, S.mul(S.mul(c, y), c))
    u = None
    for x in kernel:
        if S.mul(S.mul(t, x), t) == t:
            u = x
            break
    if u is None:
        raise KernelNotRegular("c - cyc has no quasi-inverse inside the kernel")
    m = S.mul
    cy, yc = m(c, y), m(y, c)
    d = S.add(
        S.sub(S.sub(u, m(u, cy)), m(yc, u)),
        S.add(m(m(yc, u), cy), y),
    )
    return d


# -- reconstruction of the space from the ring ---------------------------------

def _flat(A):
    return tuple(x for row in A for x in row)


def matrix_units(n):
    for i in range(n):
        for j in range(n):
            yield tuple(tuple(1 if (r, c) == (i, j) else 0 for c in range(n)) for r in range(n))


@dataclass
class Reconstruction:
    space: GramSpace
    rep: RingHom
    case: str
    basis: list
    verified: bool
    faithful: bool


def reconstruct_space(ring, e):
    """Rebuild a space from a rank-1 idempotent of End(V).

    The left ideal Re is a vector space over eRe = F e.  With e = e* the form
    is <v, w> e = e v* w.  When e e* = 0 = e* e that product vanishes
    identically, so the form is carried over by a fixed nonzero t in e R e*:
    <v, w> e = t v* w.
    """
    F, n = ring.field, ring.n
    if ring.mul(e, e) != e:
        raise BadIdempotent("element is not idempotent")
    if ring.rank(e) != 1:
        raise RankNotOne("idempotent must have rank 1")
    es = ring.star(e)
    zero = ring.zero()
    if es == e:
        case, t = "projection", e
    elif ring.mul(e, es) == zero and ring.mul(es, e) == zero:
        case = "alternate"
        t = next(x for x in (ring.mul(ring.mul(e, E), es) for E in matrix_units(n)) if x != zero)
    else:
        raise BadIdempotent("need e = e* or e e* = 0 = e* e")

    basis, flats = [], []
    for E in matrix_units(n):
        v = ring.mul(E, e)
        if la.rank(F, flats + [_flat(v)]) > len(flats):
            basis.append(v)
            flats.append(_flat(v))
    i0, j0 = next((i, j) for i in range(n) for j in range(n) if e[i][j])
    pivot_inv = F.inv(e[i0][j0])

    def coord(lam):
        c = F.mul(lam[i0][j0], pivot_inv)
        assert la.mat_scale(F, c, e) == lam, "value outside F e"
        return c

    def form(v, w):
        return coord(ring.mul(ring.mul(t, ring.star(v)), w))

    gram = tuple(tuple(form(v, w) for w in basis) for v in basis)
    space = make_space(F, gram)
    target = MatrixRing(space)
    d = len(basis)

    def rep(r):
        cols = []
        for b in basis:
            c = la.solve_left(F, flats, _flat(ring.mul(r, b)), n * n)
            if c is None:  # pragma: no cover - Re is a left ideal
                raise ValueError("left multiplication leaves Re")
            cols.append(c)
        return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))

    hom = RingHom(ring, target, rep)
    units = list(matrix_units(n))
    verified = hom_violation(hom, elements=units, pair_elements=units) is None
    images = [_flat(rep(E)) for E in units]
    faithful = la.rank(F, images) == n * n
    return Reconstruction(space, hom, case, basis, verified, faithful)


def find_reconstruction_idempotent(ring):
    """First rank-1 projection, else first rank-1 idempotent with e e* = 0 = e* e."""
    alt = None
    zero = ring.zero()
    for r in ring.rank_one_matrices(force_cap=True):
        if not ring.is_idempotent(r):
            continue
        rs = ring.star(r)
        if rs == r:
            return r
        if alt is None and ring.mul(r, rs) == zero and ring.mul(rs, r) == zero:
            alt = r
    return alt


def reconstruction_roundtrip(space):
    """Reconstruct from End(V) and compare with V (similarity for n <= 2)."""
    ring = MatrixRing(space)
    e = find_reconstruction_idempotent(ring)
    if e is None:
        raise BadIdempotent("no suitable rank-1 idempotent")
    rec = reconstruct_space(ring, e)
    similar = is_similar(rec.space, space) if space.n <= 2 else None
    return rec, similar
