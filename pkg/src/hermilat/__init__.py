"""Exact computations with finite sesquilinear spaces, their adjoint *-rings
and their subspace lattices."""
from .constructions import field_embedding, joint_extension, lift_ring_embedding, tensorial_embed
from .field import FROBENIUS_HALF, IDENTITY, InvolutiveField, make_field, verify_involution
from .lattice import FiniteGaloisLattice, LatticeHom, check_laws, congruences, product
from .ring import (
    MatrixRing,
    ProductRing,
    RingHom,
    adjoint,
    generated_subring,
    idempotent_generator,
    lift_quasi_inverse,
    product_ring,
    quasi_inverse,
    reconstruct_space,
    regularity_report,
)
from .space import (
    GramSpace,
    Subspace,
    enumerate_subspaces,
    extend_to_summand,
    find_similitude,
    inner,
    is_similar,
    make_space,
    orthogonal,
    orthogonal_sum,
    span,
)
from .subspace_lattice import (
    geometry_roundtrip,
    geometry_axiom_check,
    geometry_of_lattice,
    geometry_of_space,
    lattice_of_ring,
    lattice_of_space,
    ideal_lattice_check,
    polarity_subalgebra_search,
)
from .suite import run_suite

__version__ = "0.1.0"
