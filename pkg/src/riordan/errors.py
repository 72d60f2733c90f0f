"""Exception types raised by the library.

Everything derives from :class:`RiordanError`, itself a ``ValueError``, so
callers that only care about "bad mathematical input" can catch one thing.
"""

from __future__ import annotations


class RiordanError(ValueError):
    pass


class StructuralError(RiordanError):
    """Malformed value: wrong coefficient count, bad index, and so on."""


class TruncationError(RiordanError):
    """A result was requested beyond the order to which the inputs are known."""


class NotInvertibleError(RiordanError):
    pass


class CompositionUndefinedError(RiordanError):
    pass


class NoCompositionalInverseError(RiordanError):
    pass


class SqrtUnsupportedError(RiordanError):
    pass


class NotDivisibleError(RiordanError):
    pass


class NotProperPairError(RiordanError):
    pass


class NotNormalizedError(RiordanError):
    """Raised where the operation needs ``g(0) = 1``."""


class NotRiordanError(RiordanError):
    """A triangle violates the A/Z recurrences at entry ``witness = (n, k)``."""

    def __init__(self, message: str, witness: tuple[int, int]):
        super().__init__(message)
        self.witness = witness


class HypothesisUnmetError(RiordanError):
    pass


class NotApplicableError(RiordanError):
    pass


class ParseError(RiordanError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
