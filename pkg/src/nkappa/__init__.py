"""Generalized Nevanlinna functions from finite-dimensional Pontryagin-space realizations.

Evaluation, inversion through the ``J``-orthogonal projection onto
``range(Gamma)``, the polynomial/resolvent decomposition of the inverse,
negative-index bookkeeping and a small calculus of linear relations.
"""

from .errors import (
    AssumptionError,
    GramNotInvertibleError,
    NkappaError,
    NumericalError,
    PoleError,
    SingularMatrixError,
    ValidationError,
)
from .numeric import Tolerance, DEFAULT_TOL, hermitian_eigen, rank_and_range, solve_or_invert
from .krein import FundamentalSymmetry, is_j_selfadjoint, j_adjoint, subspace_signature, validate_symmetry
from .relations import LinearRelation, operator_part_split, relation_algebra, relation_parts
from .realization import (
    KLFormRealization,
    Realization,
    derivative_at_infinity,
    evaluate,
    from_resolvent_form,
    kernel_of_Q,
    minimality,
    reduce_to_minimal,
    regularize_derivative,
    split_at_pole,
    to_resolvent_form,
)
from .inversion import (
    InverseDecomposition,
    decompose_inverse,
    inverse_relation_multivalued_part,
    invert_at,
    pole_cancellation_function,
    projection_P,
    verify_identity_46,
    zeros_of_Q,
)
from .kernel import SamplePlan, check_symmetry, estimate_negative_squares, nevanlinna_kernel
from .io import load_fixture, load_realization

__version__ = "0.1.0"
