import itertools
import logging
import numpy as np
from core.tfa import gaussian_window
from experiments.base import Base
from fio.gabor import gabor_matrix_block, gabor_matrix_via_stft
from fio.symbols import GaussianSymbol, SymbolGrid
from phases.kohnnirenberg import KohnNirenberg
from phases.quadraticchirp import QuadraticChirp

logger = logging.getLogger(__name__)

PHASE_SPACE_POINTS = tuple(itertools.product((-1.0, 0.0, 1.0), repeat=2))
IDENTITY_RTOL = 1e-6


class GaborIdentity(Base):
    """
    |⟨T g_{x,ω}, g_{x',ω'}⟩| from one operator application per source against the
    closed-form STFT of the symbol with window conj(Ψ_z)
    """
    name = 'gabor-identity'

    def deviation(self, phase, sigma, g):
        direct = np.abs(gabor_matrix_block(phase, sigma, g, PHASE_SPACE_POINTS, PHASE_SPACE_POINTS))
        via = np.zeros_like(direct)
        for (row, (x, omega)), (column, (x2, omega2)) in itertools.product(enumerate(PHASE_SPACE_POINTS),
                                                                         enumerate(PHASE_SPACE_POINTS)):
            via[row, column] = gabor_matrix_via_stft(phase, sigma, g, x, omega, x2, omega2)
        return float(np.max(np.abs(direct - via)) / np.max(direct))

    def run(self):
        g = gaussian_window(self.grid, self.cfg.window_scale)
        sigma = SymbolGrid.from_descriptor(GaussianSymbol(), self.grid)
        deviations = {}
        for phase in (KohnNirenberg(), QuadraticChirp()):
            deviations[phase.kind.name] = self.deviation(phase, sigma, g)
            self.check(phase.kind.name + ' gabor matrix', 0.0, deviations[phase.kind.name], IDENTITY_RTOL,
                       'relative error')
        self.result.details = {'tuples': len(PHASE_SPACE_POINTS) ** 2, 'max_relative_deviation': deviations}
        return self.result


def gabor_identity_experiment(cfg):
    return GaborIdentity(cfg).run()
