from phases.enums import PhaseKind
from phases.generalquadratic import GeneralQuadratic


class QuadraticChirp(GeneralQuadratic):
    """
    Φ(x, η) = xη + x²/2; with σ ≡ 1 this is multiplication by e^{iπx²}
    """
    kind = PhaseKind.quadratic_chirp

    def __init__(self):
        super(QuadraticChirp, self).__init__(1.0, 1.0, 0.0)
