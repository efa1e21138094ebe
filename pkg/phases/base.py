import numpy as np
from abc import ABC, abstractmethod
from core.constants import GAUSS_LEGENDRE_POINTS


def gauss_legendre_unit(points=GAUSS_LEGENDRE_POINTS):
    """
    Gauss-Legendre nodes and weights mapped to [0, 1]
    """
    nodes, weights = np.polynomial.legendre.leggauss(points)
    return 0.5 * (nodes + 1.0), 0.5 * weights


class PhaseSpec(ABC):
    """
    Base class for all phase functions Φ(x, η) in dimension one
    """
    kind = None
    quadratic = False

    def __init__(self):
        super(PhaseSpec, self).__init__()

    @abstractmethod
    def phase(self, x, eta):
        None

    @abstractmethod
    def grad_x(self, x, eta):
        None

    @abstractmethod
    def grad_eta(self, x, eta):
        None

    @abstractmethod
    def d_xx(self, x, eta):
        None

    @abstractmethod
    def d_xeta(self, x, eta):
        None

    @abstractmethod
    def d_etaeta(self, x, eta):
        None

    def hessian(self, x, eta):
        """
        (Φ_xx, Φ_xη, Φ_ηη) broadcast to the shape of x and η
        """
        shape = np.broadcast(np.asarray(x), np.asarray(eta)).shape
        return tuple(np.broadcast_to(np.asarray(part, dtype=float), shape)
                     for part in (self.d_xx(x, eta), self.d_xeta(x, eta), self.d_etaeta(x, eta)))

    def taylor_remainder(self, z, zeta1, zeta2):
        """
        Φ_{2,z}(ζ) = 2 Σ_{|α|=2} ∫_0^1 (1-t) ∂^αΦ(z+tζ) dt ζ^α/α!
        """
        zeta1, zeta2 = np.broadcast_arrays(np.asarray(zeta1, dtype=float), np.asarray(zeta2, dtype=float))
        if self.quadratic:
            xx, xeta, etaeta = self.hessian(z[0], z[1])
            return 0.5 * xx * zeta1 ** 2 + xeta * zeta1 * zeta2 + 0.5 * etaeta * zeta2 ** 2
        nodes, weights = gauss_legendre_unit()
        integrals = [np.zeros(zeta1.shape), np.zeros(zeta1.shape), np.zeros(zeta1.shape)]
        for t, weight in zip(nodes, weights):
            parts = self.hessian(z[0] + t * zeta1, z[1] + t * zeta2)
            for integral, part in zip(integrals, parts):
                integral += weight * (1.0 - t) * part
        xx, xeta, etaeta = integrals
        return xx * zeta1 ** 2 + 2.0 * xeta * zeta1 * zeta2 + etaeta * zeta2 ** 2

    def describe(self):
        return {'kind': self.kind.name}
