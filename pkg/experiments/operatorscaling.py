import numpy as np
from core.common import load_phase
from core.constants import GAUSSIAN_SLOPE_TOLERANCE
from core.exceptions import UsageError
from core.norms import modulation_norm
from core.oracles import (dilated_gaussian, dilated_gaussian_limit_exponents, operator_output_kn,
                          operator_output_chirp, chirped_gaussian_norm, limit_slope)
from core.tfa import gaussian_window
from experiments.base import Base, input_signal, exponent_text
from experiments.enums import Regime
from fio.operator import apply_fio
from fio.symbols import SymbolGrid, gaussian_pair
from lib.exponents.checkers import check_pseudo
from lib.exponents.indices import IndexTuple
from phases.enums import PhaseKind

OUTPUT_ORACLES = {
    PhaseKind.kohn_nirenberg: operator_output_kn,
    PhaseKind.quadratic_chirp: operator_output_chirp,
}


class OperatorScaling(Base):
    """
    Fits of ‖T_λ φ_λ‖_{M^{t1,t2}}, ‖σ_λ‖_{M^{p,q}} and ‖φ_λ‖_{M^{r1,r2}} for
    σ_λ = φ_{λ/√2} ⊗ φ_{1/λ}, and the slope inequalities a bounded operator must obey
    """
    name = 'operator-scaling'

    def __init__(self, cfg):
        super(OperatorScaling, self).__init__(cfg)
        self.phase = load_phase(cfg.phase, cfg.coefficients)
        if self.phase.kind not in OUTPUT_ORACLES:
            raise UsageError('operator-scaling has closed forms for kohn-nirenberg and quadratic-chirp only')
        if cfg.symbol != 'gaussian-pair' or cfg.input_family != 'gaussian':
            raise UsageError('operator-scaling runs the gaussian-pair symbols on gaussian inputs')
        self.exponents = cfg.exponents
        self.output_oracle = OUTPUT_ORACLES[self.phase.kind]

    def opposite(self, regime):
        return Regime.large if regime == Regime.small else Regime.small

    def output_window(self, regime):
        if self.phase.kind == PhaseKind.kohn_nirenberg:
            return self.regime_window(regime)
        return gaussian_window(self.grid, self.cfg.window_scale)

    def dilation_norm(self, mu, p, q, window):
        return modulation_norm(dilated_gaussian(mu).sample(self.grid), p, q, None, window).value

    def symbol_norm(self, regime):
        """
        Tensor symbol norm as the product of its factor norms; each factor gets the window of its own regime
        """
        e = self.exponents
        first, second = self.regime_window(regime), self.regime_window(self.opposite(regime))

        def evaluate(lam):
            value = self.dilation_norm(lam / np.sqrt(2.0), e['p'], e['q'], first)
            value *= self.dilation_norm(1.0 / lam, e['p'], e['q'], second)
            return value ** self.cfg.d
        return evaluate

    def input_norm(self, regime):
        e, window = self.exponents, self.regime_window(regime)
        return lambda lam: self.dilation_norm(lam, e['r1'], e['r2'], window) ** self.cfg.d

    def output_norm(self, regime):
        e, window = self.exponents, self.output_window(regime)

        def evaluate(lam):
            sigma = SymbolGrid.from_descriptor(gaussian_pair(lam), self.grid)
            image = apply_fio(self.phase, sigma, input_signal(self.cfg.input_family, self.grid, lam))
            return modulation_norm(image, e['t1'], e['t2'], None, window).value ** self.cfg.d
        return evaluate

    def predicted(self, regime):
        e, d = self.exponents, self.cfg.d
        small, large = dilated_gaussian_limit_exponents(e['p'], e['q'], d)
        symbol = small - large if regime == Regime.small else large - small
        source = dilated_gaussian_limit_exponents(e['r1'], e['r2'], d)[regime.value]
        image = limit_slope(lambda lam: chirped_gaussian_norm(self.output_oracle(lam, d), e['t1'], e['t2']),
                            regime.name)
        return {'symbol': symbol, 'input': source, 'output': image}

    def run(self):
        e = self.exponents
        claim = check_pseudo(IndexTuple(e['p'], e['q'], e['r1'], e['r2'], e['t1'], e['t2']))
        self.result.details = {'phase': self.phase.describe(), 'bounded_claim': claim}
        for regime in Regime:
            predicted = self.predicted(regime)
            slopes = {}
            for series, norm in (('symbol', self.symbol_norm), ('input', self.input_norm),
                                 ('output', self.output_norm)):
                lambdas, values = self.sweep(regime, norm(regime))
                fit = self.fit(series + '-' + regime.name, lambdas, values)
                self.check(series + ' ' + regime.name + '-lambda slope', predicted[series], fit.slope,
                           GAUSSIAN_SLOPE_TOLERANCE)
                slopes[series] = fit.slope
            gap = slopes['output'] - slopes['symbol'] - slopes['input']
            holds = gap >= -GAUSSIAN_SLOPE_TOLERANCE if regime == Regime.small else gap <= GAUSSIAN_SLOPE_TOLERANCE
            self.result.details[regime.name + '_inequality'] = bool(holds)
            if claim:
                self.check(regime.name + '-lambda boundedness inequality', 1.0, float(holds), 0.0, 'inequality')
        return self.result


def operator_scaling_experiment(phase, symbol, input_family, norm_spec, cfg):
    """
    norm_spec maps p, q, r1, r2, t1, t2 to exponents; returns the fits by series
    """
    changes = {name: exponent_text(value) for name, value in norm_spec.items()}
    cfg = cfg.with_values(phase=phase, symbol=symbol, input_family=input_family, **changes)
    return OperatorScaling(cfg).run().fits
