"""Exception hierarchy.

Input problems derive from :class:`ValidationError` (the CLI maps them to
exit code 1); broken internal invariants raise
:class:`InternalInvariantViolation` (exit code 2).
"""


class Mild4Error(Exception):
    pass


class ValidationError(Mild4Error, ValueError):
    pass


class InternalInvariantViolation(Mild4Error, RuntimeError):
    pass


class SingularMatrix(ValidationError):
    pass


class ZeroVector(ValidationError):
    pass


class BadDimension(ValidationError):
    pass


class RankDeficient(ValidationError):
    def __init__(self, rank, expected=4):
        self.rank = rank
        super().__init__(f"relator matrix has rank {rank}, expected {expected}")


class DegreeTooLarge(ValidationError):
    pass


class InsufficientDegree(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class NotAUnit(ValidationError):
    pass


class PEven(ValidationError):
    pass


class NotPrime(ValidationError):
    def __init__(self, index, value):
        self.index = index
        self.value = value
        where = "p" if index is None else f"prime #{index}"
        super().__init__(f"{where} ({value}) is not prime")


class NotCongruentOneModP(ValidationError):
    def __init__(self, index, value, p):
        self.index = index
        self.value = value
        super().__init__(f"prime #{index} ({value}) is {value % p} mod {p}, not 1")


class DuplicatePrime(ValidationError):
    pass
