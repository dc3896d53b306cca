"""Exception types shared across the package."""


class TwoRowError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(TwoRowError):
    """Operands live over different field specs."""


class DivisionByZero(TwoRowError, ZeroDivisionError):
    """Multiplicative inverse of zero was requested."""


class IndexOutOfRange(TwoRowError, IndexError):
    """A 1-based row/column index fell outside the matrix, or indices coincide."""


class NotSquare(TwoRowError):
    """The operation requires a square matrix."""


class SizeMismatch(TwoRowError):
    """Operand shapes are incompatible."""


class DegenerateMatrix(TwoRowError):
    """The matrix is too small for the requested construction."""


class DegenerateGraph(TwoRowError):
    """The graph is too small for the requested construction."""


class SizeBound(TwoRowError):
    """Input exceeds the configured enumeration bound."""


class IncompleteTrack(TwoRowError):
    """The track does not cover every column of the matrix."""


class ZeroEntryInString(TwoRowError):
    """The requested string hits a zero entry."""


class SingularBasis(TwoRowError):
    """The basis matrix is not invertible."""


class DimensionMismatch(TwoRowError):
    """Vector or basis dimensions do not match the pairing."""


class AssertionFailure(TwoRowError):
    """A sweep invariant failed; carries the offending matrix."""

    def __init__(self, message: str, matrix=None):
        super().__init__(message)
        self.matrix = matrix


class ParseError(TwoRowError, ValueError):
    """Malformed input text or document."""
