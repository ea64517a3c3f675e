"""Exact computations in the real Clifford algebra Cl(r, s) viewed as a module over itself."""

from .algebra import (
    Multivector,
    OrthogonalMap,
    Signature,
    apply_orthogonal,
    blade,
    blade_indices,
    blade_mul,
    max_dimension,
    mv_add,
    mv_mul,
    mv_scale,
    omega_squared,
    volume_element,
)
from .expr import format_multivector, parse_complex_element, parse_multivector
from .gaussian import ComplexMatrix, GaussianRational
from .invariants import (
    InvariantBasis,
    brute_force_invariants,
    find_equivariant_complex_structures,
    find_equivariant_idempotents,
    invariant_subspace,
    is_equivariant,
)
from .lie import (
    LieGenerator,
    LinearOperator,
    act_on_blade,
    act_on_multivector,
    act_on_vector,
    action_matrix,
    check_so_membership,
    left_mul_operator,
    right_mul_operator,
    sample_so_elements,
)
from .modules import (
    ComplexBasis,
    ComplexStructure,
    Projection,
    canonical_complex_basis,
    classify_matrix_algebra,
    complex_coordinates,
    complex_rep_matrix,
    gamma_matrices,
    image_basis,
    make_complex_structure,
    make_idempotent,
    verify_clifford_relations,
)

__version__ = "0.1.0"
