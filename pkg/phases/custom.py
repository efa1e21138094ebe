from phases.base import PhaseSpec
from phases.enums import PhaseKind


class Custom(PhaseSpec):
    """
    Phase given by user supplied evaluators for Φ, its gradient and its Hessian
    """
    kind = PhaseKind.custom

    def __init__(self, phase, grad_x, grad_eta, d_xx, d_xeta, d_etaeta, quadratic=False):
        super(Custom, self).__init__()
        self._phase = phase
        self._grad_x = grad_x
        self._grad_eta = grad_eta
        self._d_xx = d_xx
        self._d_xeta = d_xeta
        self._d_etaeta = d_etaeta
        self.quadratic = quadratic

    def phase(self, x, eta):
        return self._phase(x, eta)

    def grad_x(self, x, eta):
        return self._grad_x(x, eta)

    def grad_eta(self, x, eta):
        return self._grad_eta(x, eta)

    def d_xx(self, x, eta):
        return self._d_xx(x, eta)

    def d_xeta(self, x, eta):
        return self._d_xeta(x, eta)

    def d_etaeta(self, x, eta):
        return self._d_etaeta(x, eta)
