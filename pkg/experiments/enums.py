from enum import Enum


class CheckStatus(Enum):
    """
    Enum class for the outcome of a single experiment check
    """
    passed = 0
    failed = 1


class Regime(Enum):
    """
    Enum class for the two ends of a λ sweep
    """
    small = 0
    large = 1
