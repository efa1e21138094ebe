from phases.base import PhaseSpec
from phases.enums import PhaseKind


class Adjoint(PhaseSpec):
    """
    Φ̃(x, η) = -Φ(-η, x), the phase of the adjoint of F T F^{-1}
    """
    kind = PhaseKind.adjoint

    def __init__(self, parent):
        super(Adjoint, self).__init__()
        self.parent = parent
        self.quadratic = parent.quadratic

    def phase(self, x, eta):
        return -self.parent.phase(-eta, x)

    def grad_x(self, x, eta):
        return -self.parent.grad_eta(-eta, x)

    def grad_eta(self, x, eta):
        return self.parent.grad_x(-eta, x)

    def d_xx(self, x, eta):
        return -self.parent.d_etaeta(-eta, x)

    def d_xeta(self, x, eta):
        return self.parent.d_xeta(-eta, x)

    def d_etaeta(self, x, eta):
        return -self.parent.d_xx(-eta, x)

    def describe(self):
        return {'kind': self.kind.name, 'parent': self.parent.describe()}
