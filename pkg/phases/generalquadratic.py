import numpy as np
from phases.base import PhaseSpec
from phases.enums import PhaseKind


class GeneralQuadratic(PhaseSpec):
    """
    Φ(x, η) = c_xx x²/2 + c_xη xη + c_ηη η²/2
    """
    kind = PhaseKind.general_quadratic
    quadratic = True

    def __init__(self, c_xx=0.0, c_xeta=1.0, c_etaeta=0.0):
        super(GeneralQuadratic, self).__init__()
        self.c_xx = float(c_xx)
        self.c_xeta = float(c_xeta)
        self.c_etaeta = float(c_etaeta)

    def phase(self, x, eta):
        return 0.5 * self.c_xx * x ** 2 + self.c_xeta * x * eta + 0.5 * self.c_etaeta * eta ** 2

    def grad_x(self, x, eta):
        return self.c_xx * x + self.c_xeta * eta

    def grad_eta(self, x, eta):
        return self.c_xeta * x + self.c_etaeta * eta

    def d_xx(self, x, eta):
        return np.full(np.broadcast(np.asarray(x), np.asarray(eta)).shape, self.c_xx)

    def d_xeta(self, x, eta):
        return np.full(np.broadcast(np.asarray(x), np.asarray(eta)).shape, self.c_xeta)

    def d_etaeta(self, x, eta):
        return np.full(np.broadcast(np.asarray(x), np.asarray(eta)).shape, self.c_etaeta)

    def describe(self):
        return {'kind': self.kind.name, 'c_xx': self.c_xx, 'c_xeta': self.c_xeta, 'c_etaeta': self.c_etaeta}
