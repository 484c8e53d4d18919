import pytest
from hypothesis import given, settings, strategies as st

from hermilat import linalg as la
from hermilat.errors import (
    DegenerateSpace,
    DimensionCap,
    FieldMismatch,
    LengthMismatch,
    NonSquareGram,
    ZeroScale,
)
from hermilat.field import FROBENIUS_HALF, make_field
from hermilat.space import (
    count_subspaces,
    enumerate_subspaces,
    extend_to_summand,
    find_similitude,
    inner,
    is_similar,
    is_subspace_of,
    is_summand,
    make_space,
    orthogonal,
    orthogonal_sum,
    radical_report,
    scale,
    span,
    subquotient,
    subspace_algebra,
    subspace_meet,
    subspace_sum,
    zero_subspace,
)

F2, F3 = make_field(2), make_field(3)
F4 = make_field(2, 2, involution=FROBENIUS_HALF)
SYMP = ((0, 1), (1, 0))
I2 = la.identity(2)


def test_gf3_identity_is_anisotropic_hermitian():
    c = make_space(F3, I2).classification
    assert c.nondegenerate and c.hermitian and c.anisotropic and c.orthosymmetric
    assert c.epsilon == 1 and not c.alternate


def test_gf2_symplectic_is_alternate():
    c = make_space(F2, SYMP).classification
    assert c.nondegenerate and c.alternate and c.skew_symmetric and c.orthosymmetric
    assert c.epsilon == 1


def test_gf4_hermitian_is_isotropic():
    V = make_space(F4, I2)
    assert V.classification.hermitian and not V.classification.anisotropic
    assert inner(V, (1, 1), (1, 1)) == 0


def test_non_orthosymmetric_form():
    c = make_space(F3, ((1, 1), (0, 1))).classification
    assert c.orthosymmetric is False and c.epsilon is None


def test_inner_examples():
    assert inner(make_space(F3, I2), (1, 2), (1, 1)) == 0
    V = make_space(make_field(2, 2, involution=FROBENIUS_HALF), I2)
    assert inner(V, (2, 0), (1, 0)) == 3
    with pytest.raises(LengthMismatch):
        inner(V, (1,), (1, 0))


def test_make_space_errors():
    with pytest.raises(NonSquareGram):
        make_space(F3, ((1, 0),))
    with pytest.raises(DimensionCap):
        make_space(F2, la.identity(9))


def test_orthogonal_examples():
    V = make_space(F3, I2)
    assert orthogonal(V, span(F3, [(1, 0)], 2)) == span(F3, [(0, 1)], 2)
    assert orthogonal(V, zero_subspace(2)).dim == 2
    S = make_space(F2, SYMP)
    U = span(F2, [(1, 0)], 2)
    assert orthogonal(S, U) == U
    with pytest.raises(DegenerateSpace):
        orthogonal(make_space(F3, ((1, 0), (0, 0))), U)


def test_radical_report():
    S = make_space(F2, SYMP)
    U = span(F2, [(1, 0)], 2)
    rep = radical_report(S, U)
    assert rep["radical"] == U and not rep["summand"] and rep["closed"]
    rep = radical_report(make_space(F3, I2), span(F3, [(1, 0)], 2))
    assert rep["radical"].is_zero() and rep["summand"]


def test_extend_to_summand_examples():
    S = make_space(F2, SYMP)
    U = extend_to_summand(S, span(F2, [(1, 0)], 2))
    assert U.dim == 2
    assert extend_to_summand(S, zero_subspace(2)).is_zero()
    V = make_space(F3, I2)
    W = span(F3, [(1, 0)], 2)
    assert extend_to_summand(V, W) == W


def test_subquotient():
    S = make_space(F2, SYMP)
    assert subquotient(S, span(F2, [(1, 0)], 2)).n == 0
    V = make_space(F3, la.identity(3))
    Q = subquotient(V, span(F3, [(1, 1, 1), (0, 1, 2)], 3))
    assert Q.classification.nondegenerate and Q.classification.epsilon == 1


def test_scale():
    V = make_space(F3, I2)
    assert scale(V, 1) == V
    W = scale(V, 2)
    assert W.gram == ((2, 0), (0, 2))
    subs = enumerate_subspaces(F3, 2)
    for U in subs:
        assert orthogonal(V, U) == orthogonal(W, U)
    with pytest.raises(ZeroScale):
        scale(V, 0)
    G4 = make_space(make_field(2, 2, involution=FROBENIUS_HALF), I2)
    w = 2
    eps = G4.field.div(w, G4.field.star(w))
    assert scale(G4, w).classification.epsilon == eps == 3


def test_orthogonal_sum():
    assert orthogonal_sum(make_space(F3, I2), make_space(F3, ((1,),))).gram == la.identity(3)
    S = orthogonal_sum(make_space(F2, SYMP), make_space(F2, SYMP))
    assert S.n == 4 and S.classification.alternate
    assert orthogonal_sum(make_space(F3, I2), make_space(F3, ())).gram == I2
    with pytest.raises(FieldMismatch):
        orthogonal_sum(make_space(F3, I2), make_space(F2, I2))


def test_similarity():
    V = make_space(F3, I2)
    assert is_similar(V, make_space(F3, ((2, 0), (0, 2))))
    T, mu = find_similitude(V, scale(V, 2))
    assert mu == 2
    # determinants 1 and 2 lie in different square classes, and scaling by 2 keeps det 1
    assert not is_similar(V, make_space(F3, ((1, 0), (0, 2))))
    with pytest.raises(FieldMismatch):
        is_similar(V, make_space(F2, I2))


@pytest.mark.parametrize("F,n,expected", [(F2, 3, 16), (F2, 4, 67), (F3, 2, 6), (F3, 3, 28), (F4, 2, 7)])
def test_subspace_counts(F, n, expected):
    subs = enumerate_subspaces(F, n)
    assert len(subs) == expected == count_subspaces(n, F.q)
    assert len(set(subs)) == expected
    assert [U.dim for U in subs] == sorted(U.dim for U in subs)


def test_subspace_algebra():
    alg = subspace_algebra(make_space(F2, la.identity(3)))
    a, b = span(F2, [(1, 0, 0)], 3), span(F2, [(0, 1, 0)], 3)
    s = alg.sum(a, b)
    assert s.dim == 2 and alg.contains(s, (1, 1, 0))
    assert alg.meet(s, span(F2, [(1, 1, 0), (0, 0, 1)], 3)) == span(F2, [(1, 1, 0)], 3)
    assert len(alg.enumerate_all()) == 16


SPACES = [make_space(F3, I2), make_space(F2, SYMP), make_space(F4, I2), make_space(F2, la.identity(3)),
          make_space(F3, ((0, 1, 0), (2, 0, 0), (0, 0, 0)))]


@pytest.mark.parametrize("V", [s for s in SPACES if s.classification.nondegenerate])
def test_lattice_identities(V):
    subs = enumerate_subspaces(V.field, V.n)
    for U in subs:
        P = orthogonal(V, U)
        assert U.dim + P.dim == V.n
        assert orthogonal(V, P) == U
        W = extend_to_summand(V, U)
        assert is_summand(V, W) and is_subspace_of(V.field, U, W) and W.dim <= 2 * U.dim
    for U in subs:
        for W in subs:
            assert orthogonal(V, subspace_sum(V.field, U, W)) == subspace_meet(
                V.field, orthogonal(V, U), orthogonal(V, W))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 8), min_size=4, max_size=4), st.lists(st.integers(0, 8), min_size=4, max_size=4),
       st.integers(0, 8), st.integers(0, 8))
def test_sesquilinearity(u, v, lam, mu):
    F = make_field(3, 2, involution=FROBENIUS_HALF)
    V = make_space(F, ((1, 2, 0, 0), (6, 0, 1, 0), (0, 1, 0, 3), (0, 0, 3, 1)))
    lhs = inner(V, la.vec_scale(F, lam, u), la.vec_scale(F, mu, v))
    assert lhs == F.mul(F.mul(F.star(lam), inner(V, u, v)), mu)
