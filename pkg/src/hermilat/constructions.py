"""Field embeddings compatible with the involutions, and the ring and lattice
embeddings they induce on coordinate-aligned extensions of spaces."""
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .errors import EpsilonMismatch, FieldMismatch, NoCompatibleEmbedding, NotAHom
from .lattice import LatticeHom, hom_violation as lattice_hom_violation, product
from .ring import MatrixRing, ProductRing, RingHom, hom_violation as ring_hom_violation, matrix_units
from .space import make_space, orthogonal_sum, span
from .subspace_lattice import lattice_of_space

EXHAUSTIVE_CARRIER = 10**4
EXHAUSTIVE_PAIRS = 100


@dataclass
class FieldEmbedding:
    source: object
    target: object
    table: tuple

    def __call__(self, a):
        return self.table[a]

    def to_json(self):
        return {"source": self.source.to_json(), "target": self.target.to_json(), "map": list(self.table)}


def _eval_at(F, K, code, root):
    """Image of a polynomial-basis element of F when x is sent to ``root`` in K."""
    acc, power = 0, 1
    for d in F.to_digits(code):
        if d:
            acc = K.add(acc, K.mul(K.from_int(d), power))
        power = K.mul(power, root)
    return acc


def _is_embedding(F, K, table):
    if len(set(table)) != F.q or table[1] != 1:
        return False
    for a in F.elements():
        if table[F.star(a)] != K.star(table[a]):
            return False
    if F.q <= 64:
        for a in F.elements():
            for b in F.elements():
                if table[F.add(a, b)] != K.add(table[a], table[b]):
                    return False
                if table[F.mul(a, b)] != K.mul(table[a], table[b]):
                    return False
    return True


def field_embedding(F, K):
    """Least embedding table of F into K commuting with the involutions.

    Candidates send x to the roots of F's modulus in K in increasing code
    order, which makes the first hit the lexicographically least table.
    """
    if F.p != K.p or K.k % F.k:
        raise NoCompatibleEmbedding(f"GF({F.q}) does not embed in GF({K.q})")
    for root in K.elements():
        val = 0
        power = 1
        for c in F.modulus:
            if c:
                val = K.add(val, K.mul(K.from_int(c), power))
            power = K.mul(power, root)
        if val:
            continue
        table = tuple(_eval_at(F, K, a, root) for a in F.elements())
        if _is_embedding(F, K, table):
            return FieldEmbedding(F, K, table)
    raise NoCompatibleEmbedding(f"no embedding GF({F.q}) -> GF({K.q}) respects the involutions")


def _map_matrix(alpha, A):
    t = alpha.table
    return tuple(tuple(t[x] for x in row) for row in A)


@dataclass
class TensorialEmbedding:
    alpha: FieldEmbedding
    omega: tuple  # matrix over the target field; columns are images of the source basis
    source: object
    target: object

    def __call__(self, v):
        return la.mat_vec(self.target.field, self.omega, tuple(self.alpha(x) for x in v))


def tensorial_embed(space, alpha):
    """Extend scalars along alpha: W = K^n with Gram alpha(G), omega the identity."""
    if alpha.source != space.field:
        raise FieldMismatch("embedding source differs from the space's field")
    K, n = alpha.target, space.n
    target = make_space(K, _map_matrix(alpha, space.gram))
    t = TensorialEmbedding(alpha, la.identity(n), space, target)
    from .space import inner

    basis = la.identity(n)
    for u in basis:
        for v in basis:
            if inner(target, t(u), t(v)) != alpha(inner(space, u, v)):
                raise NotAHom("form not preserved on basis", (u, v))
    if span(K, [t(u) for u in basis], n).dim != n:
        raise NotAHom("image does not span the target", ())
    cs, ct = space.classification, target.classification
    if cs.epsilon is not None and ct.epsilon != alpha(cs.epsilon):
        raise EpsilonMismatch(f"epsilon {cs.epsilon} maps to {alpha(cs.epsilon)}, target has {ct.epsilon}")
    # with a nontrivial target involution the extended form is hermitian, not alternate
    if cs.alternate and K.involution == "identity" and not ct.alternate:
        raise NotAHom("alternate form lost under extension", ())
    return t


def additive_generators(F, n):
    """lambda * E_ij for lambda in the prime-field basis 1, x, x^2, ... of F."""
    basis = [F.p**i for i in range(F.k)]
    out = []
    for E in matrix_units(n):
        for lam in basis:
            out.append(la.mat_scale(F, lam, E))
    return out


def _ring_check_sets(ring, generators):
    """Unary and binary check sets; exhaustive on small carriers.

    Beyond the pair threshold the binary laws run on additive generators,
    which suffices because the maps built here are additive by construction.
    """
    if ring.size <= EXHAUSTIVE_CARRIER:
        elements = list(ring.elements())
        pairs = elements if ring.size <= EXHAUSTIVE_PAIRS else generators
        return elements, pairs, "exhaustive" if pairs is elements else "generators"
    return generators, generators, "generators"


@dataclass
class EmbeddingReport:
    ring_hom: RingHom
    lattice_hom: LatticeHom
    ring_mode: str
    ring_injective: bool
    lattice_injective: bool

    @property
    def ok(self):
        return self.ring_injective and self.lattice_injective

    def to_json(self):
        return {
            "ring_mode": self.ring_mode,
            "ring_injective": self.ring_injective,
            "lattice_injective": self.lattice_injective,
            "lattice_map": [int(x) for x in self.lattice_hom.mapping],
        }


def _check_ring_embedding(hom, elements, pairs, injective_by_table):
    w = ring_hom_violation(hom, elements, pairs)
    if w is not None:
        raise NotAHom(f"not a *-ring homomorphism: {w[0]}", w)
    if hom.source.size <= EXHAUSTIVE_CARRIER:
        return len(hom.kernel_elements()) == 1
    return injective_by_table


def _check_lattice_embedding(phi):
    w = lattice_hom_violation(phi, galois=True)
    if w is not None:
        raise NotAHom(f"not a Galois-lattice homomorphism: {w}", w)
    return len(set(phi.mapping)) == phi.source.size


def lift_ring_embedding(t):
    """Entrywise alpha on End(V) -> End(W), plus U -> span alpha(U) on subspaces, both verified."""
    V, W, alpha = t.source, t.target, t.alpha
    RV, RW = MatrixRing(V), MatrixRing(W)
    hom = RingHom(RV, RW, lambda A: _map_matrix(alpha, A))
    elements, pairs, mode = _ring_check_sets(RV, additive_generators(V.field, V.n))
    ring_inj = _check_ring_embedding(hom, elements, pairs, len(set(alpha.table)) == V.field.q)

    LV, LW = lattice_of_space(V), lattice_of_space(W)
    K, n = W.field, W.n
    f = [LW.index[span(K, [t(u) for u in U.basis], n).basis] for U in LV.subspaces]
    phi = LatticeHom(LV, LW, f)
    return EmbeddingReport(hom, phi, mode, ring_inj, _check_lattice_embedding(phi))


@dataclass
class JointExtension:
    space: object
    ring_emb: RingHom
    lattice_emb: LatticeHom
    report: EmbeddingReport

    def to_json(self):
        return {"space": self.space.to_json(), **self.report.to_json()}


def _block_diag(K, A, B):
    n, m = len(A), len(B)
    rows = [tuple(A[i]) + (0,) * m for i in range(n)]
    rows += [(0,) * n + tuple(B[j]) for j in range(m)]
    return tuple(rows)


def joint_extension(V0, V1, alpha0, alpha1):
    """Embed End(V0) x End(V1) and L(V0) x L(V1) into the orthogonal sum of the extended spaces."""
    if alpha0.target != alpha1.target:
        raise FieldMismatch("the two embeddings have different target fields")
    t0, t1 = tensorial_embed(V0, alpha0), tensorial_embed(V1, alpha1)
    W0, W1 = t0.target, t1.target
    e0, e1 = W0.classification.epsilon, W1.classification.epsilon
    if W0.n and W1.n and e0 != e1:
        raise EpsilonMismatch(f"extended spaces have epsilon {e0} and {e1}; the sum would not be epsilon-hermitian")
    K = alpha0.target
    W = orthogonal_sum(W0, W1)
    n0 = W0.n

    src = ProductRing([MatrixRing(V0), MatrixRing(V1)])
    RW = MatrixRing(W)
    hom = RingHom(src, RW, lambda a: _block_diag(K, _map_matrix(alpha0, a[0]), _map_matrix(alpha1, a[1])))
    z0, z1 = la.zeros(V0.n, V0.n), la.zeros(V1.n, V1.n)
    gens = [(g, z1) for g in additive_generators(V0.field, V0.n)]
    gens += [(z0, g) for g in additive_generators(V1.field, V1.n)]
    elements, pairs, mode = _ring_check_sets(src, gens)
    injective_tables = len(set(alpha0.table)) == V0.field.q and len(set(alpha1.table)) == V1.field.q
    ring_inj = _check_ring_embedding(hom, elements, pairs, injective_tables)

    L0, L1 = lattice_of_space(V0), lattice_of_space(V1)
    LP = product([L0, L1])
    LW = lattice_of_space(W)
    f = []
    for i, j in np.ndindex(L0.size, L1.size):
        vecs = [tuple(t0(u)) + (0,) * W1.n for u in L0.subspaces[i].basis]
        vecs += [(0,) * n0 + tuple(t1(u)) for u in L1.subspaces[j].basis]
        f.append(LW.index[span(K, vecs, W.n).basis])
    phi = LatticeHom(LP, LW, f)
    report = EmbeddingReport(hom, phi, mode, ring_inj, _check_lattice_embedding(phi))
    return JointExtension(W, hom, phi, report)
