import numpy as np
import pytest

from hermilat import linalg as la
from hermilat.errors import NotAHom, NotALattice, NotPolarityCML, PrimeIncompatibleCongruence
from hermilat.field import make_field
from hermilat.lattice import (
    Congruence,
    FiniteGaloisLattice,
    LatticeHom,
    canonical_map,
    chain,
    check_arguesian,
    check_laws,
    congruences,
    expand_laws,
    faithful_family,
    find_isomorphism,
    galois_closure,
    galois_closure_set,
    generate_congruence,
    hom_tools,
    hom_violation,
    identity_congruence,
    is_congruence,
    l_f,
    m_n,
    non_polarity_example,
    pentagon,
    prime_image_congruence,
    product,
    product_projection,
    quotient,
    total_congruence,
)
from hermilat.space import make_space
from hermilat.subspace_lattice import lattice_of_space


def test_pentagon_fails_modularity_with_witness():
    L = pentagon()
    r = check_laws(L, ("modular",))["modular"]
    assert not r.passed
    x, y, z = r.witness
    J, M = L.join, L.meet
    assert L.leq[z, x]
    assert M[x, J[y, z]] != J[M[x, y], z]


def test_non_polarity_example_fails_only_polarity():
    L = non_polarity_example()
    res = check_laws(L)
    failing = sorted(k for k, r in res.items() if not r.passed)
    # not an involution either, since a'' = 1 for an atom a
    assert failing == ["involution", "polarity"]
    assert res["galois"].passed and res["modular"].passed and res["complemented"].passed
    with pytest.raises(NotPolarityCML):
        l_f(L)


def test_m3_passes_cmil_and_arguesian():
    L = m_n(3)
    res = check_laws(L, ("cmil", "arguesian"))
    assert all(r.passed for r in res.values())
    assert res["arguesian"].mode == "exhaustive" and res["arguesian"].checked == 5**6


def test_law_aliases():
    assert expand_laws(["mol"]) == ["galois", "modular", "involution", "complemented", "ortho"]
    with pytest.raises(ValueError):
        expand_laws(["nonsense"])


def test_arguesian_sampling_is_seeded():
    L = lattice_of_space(make_space(make_field(2), la.identity(4)))
    a = check_arguesian(L, seed=7, samples=20000, exhaustive_limit=0)
    b = check_arguesian(L, seed=7, samples=20000, exhaustive_limit=0)
    assert a.passed and a.mode == "sampled" and a.seed == 7 and a == b


def test_non_arguesian_lattice_detected():
    # the subspace lattice of a non-Desarguesian plane is out of reach; a
    # non-modular lattice already violates the identity
    r = check_arguesian(pentagon())
    assert not r.passed


def test_from_order_validation():
    with pytest.raises(NotALattice):
        FiniteGaloisLattice.from_order(np.array([[True, False], [False, True]]), [0, 1])
    # two incomparable upper bounds for a pair: not a lattice
    leq = np.eye(6, dtype=bool)
    for i, j in [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)]:
        leq[i, j] = True
    leq[0, :] = True
    leq[:, 5] = True
    with pytest.raises(NotALattice):
        FiniteGaloisLattice.from_order(leq, list(range(6)))


def test_congruences_small():
    rep = congruences(chain(2))
    assert len(rep.all) == 2 and rep.simple and rep.strict_simple
    rep = congruences(m_n(3))
    assert len(rep.all) == 2 and rep.simple and rep.sdi
    M3 = m_n(3)
    rep = congruences(product([M3, M3]))
    assert len(rep.all) >= 4 and not rep.sdi and not rep.simple


def test_chain_congruences_and_monolith():
    rep = congruences(chain(3))
    assert len(rep.all) == 4 and not rep.sdi
    rep = congruences(m_n(2))
    assert len(rep.all) == 4 and not rep.sdi


def test_every_reported_congruence_is_one():
    L = product([chain(2), m_n(3)])
    for th in congruences(L).all:
        assert is_congruence(L, th)


def test_generate_congruence_is_least():
    L = chain(3)
    th = generate_congruence(L, [(0, 1)])
    assert th.related(0, 1) and not th.related(1, 2)
    assert is_congruence(L, th)


def test_prime_image_and_quotient():
    L = chain(3)
    th = generate_congruence(L, [(0, 1)])
    img = prime_image_congruence(L, th)
    assert img.related(1, 2) and not img.related(0, 1)
    with pytest.raises(PrimeIncompatibleCongruence):
        quotient(L, th)
    Q = quotient(L, identity_congruence(L))
    assert find_isomorphism(Q, L) is not None
    assert quotient(L, total_congruence(L)).size == 1
    assert canonical_map(L, total_congruence(L)) == [0, 0, 0]


def test_galois_closure_is_idempotent():
    L = lattice_of_space(make_space(make_field(3), la.identity(2)))
    atom = L.atoms()[0]
    S = galois_closure_set(L, [atom])
    assert atom in S and int(L.prime[atom]) in S and L.zero in S and L.one in S
    assert galois_closure_set(L, S) == S
    sub = galois_closure(L, [atom])
    assert sub.size == len(S) == 4


def test_product_and_projections():
    L = lattice_of_space(make_space(make_field(3), la.identity(2)))
    P = product([L, L])
    assert P.size == 36
    assert all(r.passed for r in check_laws(P, ("mol",)).values())
    p0 = LatticeHom(P, L, product_projection([L, L], 0))
    p1 = LatticeHom(P, L, product_projection([L, L], 1))
    for phi in (p0, p1):
        rep = hom_tools(phi)
        assert rep["is_galois_hom"] and not rep["injective"]
    assert faithful_family([p0, p1])
    assert not faithful_family([p0]) and not faithful_family([p1])


def test_hom_tools():
    L = m_n(3)
    ident = LatticeHom(L, L, list(range(5)))
    rep = hom_tools(ident)
    assert rep["injective"] and rep["kernel"].is_identity()
    merge = LatticeHom(L, L, [0, 1, 1, 3, 4])
    with pytest.raises(NotAHom) as exc:
        hom_tools(merge)
    assert exc.value.witness[0] in ("join", "meet")
    assert hom_violation(merge) is not None


def test_find_isomorphism():
    V = make_space(make_field(2), ((0, 1), (1, 0)))
    L = lattice_of_space(V)
    assert find_isomorphism(L, m_n(3)) is not None
    assert find_isomorphism(L, m_n(3, prime=[4, 2, 1, 3, 0])) is None
    assert find_isomorphism(L, m_n(3, prime=[4, 2, 1, 3, 0]), galois=False) is not None


def test_l_f_of_polarity_cml():
    L = lattice_of_space(make_space(make_field(2), la.identity(3)))
    S = l_f(L)
    assert S.size == L.size == 16
    assert S.is_atomic() and all(r.passed for r in check_laws(S, ("cmil",)).values())


def test_covers_atoms_heights():
    L = lattice_of_space(make_space(make_field(2), la.identity(3)))
    assert len(L.atoms()) == 7 and len(L.coatoms()) == 7
    assert L.dimension() == 3
    assert sorted(L.heights()) == [0] + [1] * 7 + [2] * 7 + [3]
