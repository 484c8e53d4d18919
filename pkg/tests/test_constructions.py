import pytest

from hermilat import linalg as la
from hermilat.constructions import (
    additive_generators,
    field_embedding,
    joint_extension,
    lift_ring_embedding,
    tensorial_embed,
)
from hermilat.errors import EpsilonMismatch, FieldMismatch, NoCompatibleEmbedding
from hermilat.field import FROBENIUS_HALF, make_field
from hermilat.lattice import find_isomorphism, m_n
from hermilat.ring import MatrixRing
from hermilat.space import make_space

F2, F3 = make_field(2), make_field(3)
F4 = make_field(2, 2, involution=FROBENIUS_HALF)
F4id = make_field(2, 2)
F9 = make_field(3, 2, involution=FROBENIUS_HALF)
SYMP = ((0, 1), (1, 0))
I2 = la.identity(2)


def test_prime_field_inclusions():
    assert field_embedding(F3, F9).table == (0, 1, 2)
    assert field_embedding(F2, F4).table == (0, 1)
    assert field_embedding(F4, F4).table == (0, 1, 2, 3)


def test_incompatible_involutions():
    with pytest.raises(NoCompatibleEmbedding):
        field_embedding(F4, F4id)
    with pytest.raises(NoCompatibleEmbedding):
        field_embedding(F3, F4)


def test_gf4_into_gf16_commutes_with_involutions():
    F16 = make_field(2, 4)
    a = field_embedding(F4id, F16)
    for x in F4id.elements():
        for y in F4id.elements():
            assert a(F4id.mul(x, y)) == F16.mul(a(x), a(y))
    # lexicographically least: omega goes to the smaller root of x^2 + x + 1
    roots = [r for r in F16.elements() if F16.add(F16.add(F16.mul(r, r), r), 1) == 0]
    assert a(2) == min(roots)


def test_tensorial_embed_examples():
    t = tensorial_embed(make_space(F3, I2), field_embedding(F3, F9))
    assert t.target.gram == I2 and t.target.classification.hermitian
    t = tensorial_embed(make_space(F2, SYMP), field_embedding(F2, F4))
    assert t.target.gram == SYMP
    t = tensorial_embed(make_space(F2, SYMP), field_embedding(F2, F2))
    assert t.target.classification.alternate
    t = tensorial_embed(make_space(F3, ()), field_embedding(F3, F9))
    assert t.target.n == 0


def test_identity_embedding_lifts_to_identity():
    V = make_space(F3, I2)
    rep = lift_ring_embedding(tensorial_embed(V, field_embedding(F3, F3)))
    assert rep.ok and list(rep.lattice_hom.mapping) == list(range(6))
    for A in MatrixRing(V).elements():
        assert rep.ring_hom(A) == A


def test_gf3_to_gf9_lift_respects_adjoints():
    V = make_space(F3, I2)
    rep = lift_ring_embedding(tensorial_embed(V, field_embedding(F3, F9)))
    assert rep.ok and rep.ring_mode == "exhaustive"
    R9 = rep.ring_hom.target
    for A in MatrixRing(V).elements():
        assert rep.ring_hom(la.transpose(A)) == R9.star(rep.ring_hom(A))


def test_symplectic_lift_into_gf4():
    rep = lift_ring_embedding(tensorial_embed(make_space(F2, SYMP), field_embedding(F2, F4)))
    assert rep.ok
    phi = rep.lattice_hom
    assert phi.source.size == 5 and phi.target.size == 7
    assert find_isomorphism(phi.source, m_n(3)) is not None


def test_joint_extension_of_two_lines():
    V = make_space(F3, ((1,),))
    a = field_embedding(F3, F3)
    j = joint_extension(V, V, a, a)
    assert j.space.gram == I2
    assert j.lattice_emb.source.size == 4 and j.lattice_emb.target.size == 6
    assert j.report.ok
    images = {j.ring_emb(x) for x in j.ring_emb.source.elements()}
    diag = {((x, 0), (0, y)) for x in range(3) for y in range(3)}
    assert images == diag


def test_joint_extension_symplectic_pair():
    S = make_space(F2, SYMP)
    a = field_embedding(F2, F2)
    j = joint_extension(S, S, a, a)
    assert j.space.n == 4 and j.space.classification.alternate
    assert j.report.ok and j.report.ring_mode == "generators"
    assert j.lattice_emb.source.size == 25 and j.lattice_emb.target.size == 67


def test_joint_extension_with_zero_factor():
    V = make_space(F3, ((1,),))
    Z = make_space(F3, ())
    a = field_embedding(F3, F3)
    j = joint_extension(Z, V, a, a)
    assert j.space.gram == ((1,),) and j.report.ok


def test_joint_extension_errors():
    a3, a2 = field_embedding(F3, F3), field_embedding(F2, F2)
    with pytest.raises(FieldMismatch):
        joint_extension(make_space(F3, ((1,),)), make_space(F2, ((1,),)), a3, a2)
    skew = make_space(F3, ((0, 1), (2, 0)))
    with pytest.raises(EpsilonMismatch):
        joint_extension(make_space(F3, ((1,),)), skew, a3, a3)


def test_additive_generators_span():
    gens = additive_generators(F4, 2)
    assert len(gens) == 8
    flat = [tuple(x for row in g for x in row) for g in gens]
    # over GF(2) these generate all 256 matrices additively
    seen = {tuple([0] * 4)}
    for g in flat:
        seen |= {tuple(F4.add(a, b) for a, b in zip(s, g)) for s in seen}
    assert len(seen) == 256
