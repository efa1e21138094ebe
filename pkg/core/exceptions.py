class TamefioError(Exception):
    """
    Base class for all errors raised by tamefio
    """
    exit_code = 2


class ParameterError(TamefioError, ValueError):
    """Invalid scalar parameter (grid size, exponent, resolution...)"""


class ShapeError(TamefioError, ValueError):
    """Grids or arrays that should match do not"""


class DomainError(TamefioError, ValueError):
    """Argument outside the domain of a formula or outside grid coverage"""


class PreconditionError(TamefioError, ValueError):
    """Input violates an operation precondition (normalization, support, decay)"""


class DataError(TamefioError, ValueError):
    """Malformed or non-positive data"""


class ConfigError(TamefioError):
    """Invalid configuration"""


class UsageError(TamefioError):
    """Bad command line usage"""


class CheckFailed(TamefioError):
    """A verification check did not pass"""
    exit_code = 1
