"""Exception types raised across the package."""


class MseqcorrError(Exception):
    """Base class for all package errors."""


class UnsupportedDegree(MseqcorrError):
    pass


class NonPrimitiveModulus(MseqcorrError):
    pass


class DivisionByZero(MseqcorrError, ZeroDivisionError):
    pass


class NotInSubfield(MseqcorrError, ValueError):
    pass


class NoncubeUnavailable(MseqcorrError):
    pass


class BadDecimation(MseqcorrError, ValueError):
    pass


class NotCoprime(MseqcorrError, ValueError):
    pass


class ZeroArgument(MseqcorrError, ValueError):
    pass


class DegenerateX0(MseqcorrError, ValueError):
    pass


class PreconditionViolated(MseqcorrError, ValueError):
    pass


class InvalidPair(MseqcorrError, ValueError):
    pass


class EvenK(MseqcorrError, ValueError):
    pass


class NoSolution(MseqcorrError, ValueError):
    pass


class UnknownTheorem(MseqcorrError, KeyError):
    pass
