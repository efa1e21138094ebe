from phases.enums import PhaseKind
from phases.generalquadratic import GeneralQuadratic


class SchrodingerFree(GeneralQuadratic):
    """
    Φ(x, η) = xη + η²/2, the free Schrödinger propagator at a fixed time
    """
    kind = PhaseKind.schrodinger_free

    def __init__(self):
        super(SchrodingerFree, self).__init__(0.0, 1.0, 1.0)
