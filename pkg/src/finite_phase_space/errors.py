"""Exception hierarchy shared by all modules."""


class PhaseSpaceError(Exception):
    """Base class for errors raised by this package."""


class NotHermitian(PhaseSpaceError, ValueError):
    pass


class NoConvergence(PhaseSpaceError, ArithmeticError):
    pass


class DimensionMismatch(PhaseSpaceError, ValueError):
    pass


class EvenDimension(PhaseSpaceError, ValueError):
    pass


class NonPositiveNome(PhaseSpaceError, ValueError):
    pass


class ZeroWeight(PhaseSpaceError, ZeroDivisionError):
    pass


class NotNormalized(PhaseSpaceError, ValueError):
    pass


class NegativeMass(PhaseSpaceError, ValueError):
    pass


class InvalidParams(PhaseSpaceError, ValueError):
    pass


class IndexOutOfRange(PhaseSpaceError, IndexError):
    pass


class TooFewPeaks(PhaseSpaceError, ValueError):
    pass


__all__ = [
    "PhaseSpaceError",
    "NotHermitian",
    "NoConvergence",
    "DimensionMismatch",
    "EvenDimension",
    "NonPositiveNome",
    "ZeroWeight",
    "NotNormalized",
    "NegativeMass",
    "InvalidParams",
    "IndexOutOfRange",
    "TooFewPeaks",
]
