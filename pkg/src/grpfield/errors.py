"""Exception types shared across the package."""


class GrpError(Exception):
    """Base class for all grpfield errors."""


class ParameterError(GrpError, ValueError):
    """Invalid argument (wrong length, out of range, mismatched moduli)."""


class StabilityError(ParameterError):
    """A field parameter set violates one of the stability inequalities.

    The message names the inequality that failed.
    """


class NotPrimeError(GrpError):
    """The candidate modulus failed the primality check."""


class ZeroInverseError(GrpError):
    """Attempted to invert the zero element."""


class RangeError(GrpError, ValueError):
    """Requested bitlength is not representable for the configured word size."""
