from phases.enums import PhaseKind
from phases.generalquadratic import GeneralQuadratic


class KohnNirenberg(GeneralQuadratic):
    """
    Φ(x, η) = xη, the pseudodifferential case
    """
    kind = PhaseKind.kohn_nirenberg

    def __init__(self):
        super(KohnNirenberg, self).__init__(0.0, 1.0, 0.0)
