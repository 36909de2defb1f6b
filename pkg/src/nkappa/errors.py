"""Exception hierarchy.

Every exception carries the name of the invariant it reports so that the
command line front end can echo it, and an ``exit_code`` class attribute.
"""


class NkappaError(Exception):
    """Base class for all errors raised by :mod:`nkappa`."""

    exit_code = 1
    invariant = "unspecified"

    def __init__(self, msg, invariant=None):
        super().__init__(msg)
        if invariant is not None:
            self.invariant = invariant


class ValidationError(NkappaError, ValueError):
    """Input data violates a structural requirement (shape, symmetry, schema)."""

    exit_code = 2
    invariant = "input"


class DimensionError(ValidationError):
    invariant = "dimension"


class NotHermitianError(ValidationError):
    invariant = "hermitian"


class NotInvolutiveError(ValidationError):
    invariant = "involutive"


class NotJSelfAdjointError(ValidationError):
    invariant = "j_selfadjoint"


class SchemaError(ValidationError):
    invariant = "schema"


class NumericalError(NkappaError, ArithmeticError):
    """A computation failed for numerical reasons."""

    exit_code = 3
    invariant = "numerical"


class SingularMatrixError(NumericalError):
    """Matrix is singular to working precision.

    ``rank`` holds the numerical rank that was detected.
    """

    invariant = "nonsingular"

    def __init__(self, msg, rank):
        super().__init__(msg)
        self.rank = rank


class AssumptionError(NkappaError):
    """Arguments are well formed but a mathematical hypothesis fails.

    Examples are a non-invertible ``Gamma^+ Gamma``, an evaluation point on
    the spectrum, or a non-real point where a real one is required.
    """

    exit_code = 4
    invariant = "assumption"


class PoleError(AssumptionError):
    """Evaluation point lies on the spectrum of a representing operator."""

    invariant = "off_spectrum"

    def __init__(self, msg, eigenvalue):
        super().__init__(msg)
        self.eigenvalue = eigenvalue


class GramNotInvertibleError(AssumptionError):
    invariant = "gram_invertible"


class NotHolomorphicAtInfinityError(AssumptionError):
    invariant = "holomorphic_at_infinity"


class ParametersInsufficientError(AssumptionError):
    invariant = "regularization_parameters"
