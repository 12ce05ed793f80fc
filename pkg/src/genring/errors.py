"""Exception types shared across the package."""


class GenRingError(Exception):
    """Base class for all errors raised by this package."""


class ContextMismatch(GenRingError):
    """Two values from different rings were combined."""


class MultiplierMismatch(GenRingError):
    """Two matrices with different multipliers were combined."""


class NotEnumerable(GenRingError):
    """An exhaustive operation was requested on an infinite (or oversized) ring."""


class NotAUnit(GenRingError):
    """An inverse was demanded of a non-invertible element or matrix."""


class NotIdempotent(GenRingError):
    """An idempotent-only operation received a non-idempotent matrix."""


class NotLiftable(GenRingError):
    """A coefficientwise root lift hit a non-unit division."""


class PreconditionViolated(GenRingError):
    """Input is outside the stated domain of the operation."""


class ParseError(GenRingError):
    """A ring spec, element literal, or matrix literal failed to parse."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.pos = pos
        self.text = text
        if text:
            message = f"{message} (at position {pos} in {text!r})"
        super().__init__(message)


class InternalCheckFailed(GenRingError):
    """A machine-checked certificate or construction failed verification.

    This always signals an implementation bug, never a property of the input.
    """
