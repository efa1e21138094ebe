from enum import Enum


class PhaseKind(Enum):
    """
    Enum class for the builtin phase function kinds
    """
    kohn_nirenberg = 0
    quadratic_chirp = 1
    schrodinger_free = 2
    general_quadratic = 3
    custom = 4
    adjoint = 5
