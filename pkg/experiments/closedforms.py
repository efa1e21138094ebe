import numpy as np
from core.grid import inner
from core.oracles import (dilated_gaussian, chirp_multiplied_gaussian, schrodinger_on_gaussian,
                          operator_output_kn, operator_output_chirp)
from experiments.base import Base
from fio.operator import apply_fio
from fio.symbols import ConstantSymbol, SymbolGrid, gaussian_pair
from phases.kohnnirenberg import KohnNirenberg
from phases.quadraticchirp import QuadraticChirp
from phases.schrodingerfree import SchrodingerFree

LAMBDAS = (0.5, 1.0, 2.0)
OUTPUT_RTOL = 1e-6


def relative_l2_error(signal, reference):
    difference = signal.samples - reference.samples
    return float(np.sqrt(np.sum(np.abs(difference) ** 2) / inner(reference, reference).real * signal.grid.dx))


class ClosedForms(Base):
    """
    apply_fio against the closed-form outputs on dilated Gaussians
    """
    name = 'closed-forms'

    def cases(self, lam):
        constant = SymbolGrid.from_descriptor(ConstantSymbol(), self.grid)
        pair = SymbolGrid.from_descriptor(gaussian_pair(lam), self.grid)
        return (
            ('chirp multiplier', QuadraticChirp(), constant, chirp_multiplied_gaussian(lam)),
            ('schrodinger', SchrodingerFree(), constant, schrodinger_on_gaussian(lam)),
            ('kohn-nirenberg output', KohnNirenberg(), pair, operator_output_kn(lam)),
            ('chirp output', QuadraticChirp(), pair, operator_output_chirp(lam)),
        )

    def run(self):
        errors = {}
        for lam in LAMBDAS:
            f = dilated_gaussian(lam).sample(self.grid)
            for label, phase, sigma, expected in self.cases(lam):
                error = relative_l2_error(apply_fio(phase, sigma, f), expected.sample(self.grid))
                errors[label + ' lambda=' + format(lam, 'g')] = error
                self.check(label + ' at lambda=' + format(lam, 'g'), 0.0, error, OUTPUT_RTOL, 'relative error')
        self.result.details = {'relative_l2_errors': errors}
        return self.result


def closed_forms_experiment(cfg):
    return ClosedForms(cfg).run()
