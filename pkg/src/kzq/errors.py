"""Error types shared across the package.

Every failure the engine can signal deliberately gets its own class so the
CLI can map them to stable exit codes.
"""


class KzqError(Exception):
    pass


class OrderBoundExceeded(KzqError):
    pass


class DegreeMismatch(KzqError):
    pass


class ParseError(KzqError):
    """Carries the offset where parsing failed and what was expected."""

    def __init__(self, message, position=None, expected=None):
        super().__init__(message)
        self.position = position
        self.expected = expected

    def __str__(self):
        s = super().__str__()
        if self.position is not None:
            s += " at position %d" % self.position
        if self.expected:
            s += " (expected %s)" % self.expected
        return s


class EnumerationBudgetExceeded(KzqError):
    pass


class UnknownName(KzqError):
    pass


class NotCoprime(KzqError):
    pass


class NotInjective(KzqError):
    pass


class NotPrime(KzqError):
    pass


class UnknownSchurIndex(KzqError):
    pass


class DataConflict(KzqError):
    pass


class NonIntegralCoefficient(KzqError):
    pass


class NonCommutingSquare(KzqError):
    pass


class NonCommutingLadder(KzqError):
    pass


class NotIndexTwo(KzqError):
    pass


class NotAutomorphism(KzqError):
    pass
