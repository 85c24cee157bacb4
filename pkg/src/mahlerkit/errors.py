"""Exception hierarchy shared by all mahlerkit modules."""


class MahlerError(Exception):
    """Base class for every error raised by mahlerkit."""


class InsufficientData(MahlerError):
    """The available coefficients do not support the requested computation."""


class InsufficientOrder(InsufficientData):
    """A series is too short for the requested ansatz or reconstruction."""


class PrefixTooShort(InsufficientData):
    """A sequence prefix is too short for the requested kernel depth."""


class NotClosed(InsufficientData):
    """A kernel child fell outside the span built at the working depth."""


class NotAutomatic(MahlerError):
    """The kernel of the sequence is not finite at the working depth."""


class NotAPowerSeries(MahlerError):
    """A rational function with a pole at 0 has no power-series expansion."""


class InconsistentPrefix(MahlerError):
    """Initial coefficients violate one of the equation's constraint identities."""

    def __init__(self, index: int):
        super().__init__(f"prefix violates the coefficient identity at z^{index}")
        self.index = index


class AmbiguousPrefix(MahlerError):
    """Fewer initial coefficients than the recursion needs to be deterministic."""


class EquationSyntaxError(MahlerError, ValueError):
    """Malformed equation text. Carries the offending position."""

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        detail = f"{message} at position {position}"
        if expected:
            detail += f" (expected {' or '.join(expected)})"
        super().__init__(detail)
        self.position = position
        self.expected = expected


class InconsistentRadix(MahlerError, ValueError):
    """The F-argument exponents are not all powers of one radix."""


class MissingEndpointTerm(MahlerError, ValueError):
    """The first or last coefficient of the equation vanishes."""
