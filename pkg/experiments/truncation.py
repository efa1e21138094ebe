import logging
import numpy as np
from core.common import geometric_sweep
from core.constants import BUMP_SLOPE_TOLERANCE
from core.exceptions import PreconditionError
from core.grid import lebesgue_norm
from core.oracles import bump_fourier, chirped_bump_exponents
from experiments.base import Base, exponent_text
from experiments.chirpedbump import dispersed_bump, check_chirp_resolution
from experiments.enums import Regime


logger = logging.getLogger(__name__)

MASS_FRACTION = 0.9


def truncation_profile(grid, n):
    """
    χ_n(x) = F h(x/n) / F h(0)
    """
    return bump_fourier(grid.points / n) / bump_fourier(0.0)


class Truncation(Base):
    """
    χ_n-truncated dispersed bumps at the smallest n keeping 90% of the L^{t1} mass over the large-λ sweep
    """
    name = 'truncation'

    def __init__(self, cfg):
        super(Truncation, self).__init__(cfg)
        self.t1 = cfg.recip('t1')
        check_chirp_resolution(self.grid, max(cfg.large_range), cfg.allow_aliasing)

    def select_n(self):
        lo, hi = self.cfg.large_range
        lambdas = geometric_sweep(lo, hi, self.cfg.points_per_octave)
        dispersed = [dispersed_bump(self.grid, lam) for lam in lambdas]
        full = [lebesgue_norm(D, self.t1) for D in dispersed]
        for n in range(1, int(self.grid.extent / 2) + 1):
            chi = truncation_profile(self.grid, n)
            kept = [lebesgue_norm(D.with_samples(chi * D.samples), self.t1) for D in dispersed]
            if all(k >= MASS_FRACTION * f for k, f in zip(kept, full)):
                logger.info(self.name + ': truncation index n = ' + str(n))
                return n
        raise PreconditionError('no truncation index up to ' + str(int(self.grid.extent / 2))
                                + ' keeps ' + str(MASS_FRACTION) + ' of the mass; enlarge the grid extent')

    def run(self):
        n = self.select_n()
        chi = truncation_profile(self.grid, n)

        def truncated_norm(lam):
            D = dispersed_bump(self.grid, lam)
            return lebesgue_norm(D.with_samples(chi * D.samples), self.t1) ** self.cfg.d

        lambdas, values = self.sweep(Regime.large, truncated_norm)
        fit = self.fit('truncated', lambdas, values)
        predicted = chirped_bump_exponents(0, self.t1, self.cfg.d)[1]
        self.check('truncated L^t1 slope', predicted, fit.slope, BUMP_SLOPE_TOLERANCE)
        self.result.details = {'n': n, 't1': self.t1.label(), 'mass_fraction': MASS_FRACTION,
                               'profile_min': float(np.min(chi))}
        return self.result


def truncation_experiment(t1, cfg):
    return Truncation(cfg.with_values(t1=exponent_text(t1))).run()
