"""Exception hierarchy and error classification."""

import logging
from enum import Enum

logger = logging.getLogger(__name__)


class RicciSignatureError(Exception):
    """Base class for all library errors."""


class UnknownFamily(RicciSignatureError, ValueError):
    """Algebra family or alias is not in the catalog."""


class ParameterOutOfRange(RicciSignatureError, ValueError):
    """Family parameters violate a printed range constraint."""

    def __init__(self, family: str, constraint: str, params: dict):
        self.family = family
        self.constraint = constraint
        self.params = dict(params)
        super().__init__(
            f"{family}: parameters {self.params} violate constraint '{constraint}'"
        )


class DimensionMismatch(RicciSignatureError, ValueError):
    """Vector or matrix sizes do not agree with the algebra dimension."""


class NotPositiveDefinite(RicciSignatureError, ValueError):
    """Inner product fails the Cholesky pivot test or yields a non-orthonormal frame."""


class InvalidParams(RicciSignatureError, ValueError):
    """A_{4,9} parameters are invalid (a <= 0, b <= 0 or beta outside its range)."""


class InvalidArgument(RicciSignatureError, ValueError):
    """Operation argument outside its domain, such as a budget below one."""


class IndexOutOfRange(RicciSignatureError, IndexError):
    """Basis index outside 0..dim-1."""


class InvalidAlgebraDefinition(RicciSignatureError, ValueError):
    """User-supplied algebra file is malformed or violates the Jacobi identity."""


class NotFourDimensional(RicciSignatureError, ValueError):
    """Taxonomy indices exist only for dimension 4."""


class NotNonUnimodular(RicciSignatureError, ValueError):
    """Operation requires a non-unimodular algebra."""


class NoConvergence(RicciSignatureError, ArithmeticError):
    """Iterative numerical routine exceeded its iteration limit."""


class NoSignChange(RicciSignatureError, ArithmeticError):
    """Bisection endpoints do not bracket a zero of the tracked eigenvalue."""


class VerificationFailed(RicciSignatureError):
    """A verification suite reported at least one failing record."""


class ErrorCategory(Enum):
    """How the command line reacts to an error."""
    INPUT = "input"  # Bad flags, files or parameters
    VERIFICATION = "verification"  # Suite ran, something did not hold
    INTERNAL = "internal"  # Numerical breakdown


INPUT_ERRORS = [
    "UnknownFamily",
    "ParameterOutOfRange",
    "DimensionMismatch",
    "NotPositiveDefinite",
    "InvalidParams",
    "InvalidArgument",
    "IndexOutOfRange",
    "InvalidAlgebraDefinition",
    "NotFourDimensional",
    "NotNonUnimodular",
    "ValidationError",
    "FileNotFoundError",
    "JSONDecodeError",
    "BadParameter",
    "UsageError",
]

VERIFICATION_ERRORS = [
    "VerificationFailed",
]

EXIT_CODES = {
    ErrorCategory.INPUT: 2,
    ErrorCategory.VERIFICATION: 1,
    ErrorCategory.INTERNAL: 1,
}


def classify_error(error: BaseException) -> ErrorCategory:
    """
    Classify an exception by its type name (and its bases).

    Args:
        error: The exception raised while serving a command

    Returns:
        ErrorCategory for the exception
    """
    names = {cls.__name__ for cls in type(error).__mro__}

    if names & set(VERIFICATION_ERRORS):
        category = ErrorCategory.VERIFICATION
    elif names & set(INPUT_ERRORS):
        category = ErrorCategory.INPUT
    else:
        category = ErrorCategory.INTERNAL

    logger.debug("Classified %s as %s", type(error).__name__, category.value)
    return category


def exit_code_for(error: BaseException) -> int:
    """Process exit code for an exception."""
    return EXIT_CODES[classify_error(error)]
