import logging
import numpy as np
from core.constants import BUMP_SLOPE_TOLERANCE
from core.exceptions import PreconditionError
from core.grid import Signal, fourier, inverse_fourier, lebesgue_norm
from core.oracles import bump, chirped_bump_exponents
from experiments.base import Base, input_signal, exponent_text
from experiments.enums import Regime

logger = logging.getLogger(__name__)

SUPPORT_RADIUS = 1.0


def dispersed_bump(grid, lam):
    """
    F^{-1}(e^{-πiλξ²} h²) on grid, built from samples on its dual
    """
    spectral = grid.dual()
    xi = spectral.points
    return inverse_fourier(Signal(spectral, np.exp(-1j * np.pi * lam * xi ** 2) * bump(xi) ** 2))


def check_chirp_resolution(grid, lam, allow_aliasing=False):
    """
    Chirp rate times support radius must fit in half of the frequency and of the position extent
    """
    reach = lam * SUPPORT_RADIUS
    limit = min(grid.dual().extent, grid.extent) / 2.0
    if reach > limit:
        message = 'chirp rate ' + str(lam) + ' exceeds the resolvable ' + str(limit)
        if not allow_aliasing:
            raise PreconditionError(message)
        logger.warning(message)


class ChirpedBump(Base):
    """
    λ→∞ laws of the chirped bump: ‖F h_λ‖_{L^q} ~ λ^{d(1/q-1/2)} and the dispersed bump in L^{t1} ~ λ^{d(1/t1-1/2)}
    """
    name = 'chirped-bump'

    def __init__(self, cfg):
        super(ChirpedBump, self).__init__(cfg)
        self.q = cfg.recip('q')
        self.t1 = cfg.recip('t1')
        check_chirp_resolution(self.grid, max(cfg.large_range), cfg.allow_aliasing)

    def fourier_norm(self, lam):
        return lebesgue_norm(fourier(input_signal('bump', self.grid, lam)), self.q) ** self.cfg.d

    def dispersed_norm(self, lam):
        return lebesgue_norm(dispersed_bump(self.grid, lam), self.t1) ** self.cfg.d

    def run(self):
        symbol_slope, dispersion_slope = chirped_bump_exponents(self.q, self.t1, self.cfg.d)
        lambdas, values = self.sweep(Regime.large, self.fourier_norm)
        fit = self.fit('fourier', lambdas, values)
        self.check('fourier L^q slope', symbol_slope, fit.slope, BUMP_SLOPE_TOLERANCE)
        lambdas, values = self.sweep(Regime.large, self.dispersed_norm)
        fit = self.fit('dispersed', lambdas, values)
        self.check('dispersed L^t1 slope', dispersion_slope, fit.slope, BUMP_SLOPE_TOLERANCE)
        self.result.details = {'q': self.q.label(), 't1': self.t1.label()}
        return self.result


def chirped_bump_experiment(q, t1, cfg):
    """
    Returns the (fourier, dispersed) fits
    """
    result = ChirpedBump(cfg.with_values(q=exponent_text(q), t1=exponent_text(t1))).run()
    return result.fits['fourier'], result.fits['dispersed']
