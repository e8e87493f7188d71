"""Exception hierarchy shared by every module of the package."""


class InfoFluctError(Exception):
    """Base class for all package errors."""


class DomainError(InfoFluctError, ValueError):
    """An argument lies outside the mathematical domain of a function."""


class ValidationError(InfoFluctError, ValueError):
    """A probability mass function failed validation."""


class DataError(InfoFluctError, ValueError):
    """Observed data (symbols, codebooks, sizes) is inconsistent."""


class DegenerateSourceError(DomainError):
    """The operation needs a source with nonzero information fluctuation."""


class UndefinedCVError(DomainError):
    """Coefficient of variation requested for a zero-entropy source."""


class InsufficientSampleError(DomainError):
    """Too few observations for the requested statistic."""


class SingularPointError(DomainError):
    """Derivative requested at a point where it does not exist."""


class SizeError(InfoFluctError, ValueError):
    """An enumeration would exceed the configured size cap."""


class CorruptionError(DataError):
    """A bit stream cannot be decoded with the given codebook."""


class NumericError(InfoFluctError, ArithmeticError):
    """A numerical procedure failed (non-convergence, consistency check)."""


class ConvergenceError(NumericError):
    """Iteration cap reached before the tolerance was met."""


class BracketError(DomainError):
    """Root bracket endpoints do not straddle a sign change."""
