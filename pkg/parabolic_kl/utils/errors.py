"""Exception hierarchy for parabolic-kl."""


class KLError(Exception):
    """Base class for every error raised by the library."""


class CoefficientOverflowError(KLError, ArithmeticError):
    """A polynomial coefficient left the signed 64-bit range."""


class IncomparablePathsError(KLError, ValueError):
    """Two paths that must be pointwise comparable cross each other."""


class InvalidInputError(KLError, ValueError):
    """Malformed input: parse failures, mismatched sizes, bad indices."""


class SizeLimitError(KLError, ValueError):
    """A configured size guard was exceeded."""


class MethodMismatchError(KLError):
    """Two methods that must agree produced different polynomials."""
