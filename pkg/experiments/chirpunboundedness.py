from core.constants import GAUSSIAN_SLOPE_TOLERANCE
from core.norms import modulation_norm
from core.oracles import (dilated_gaussian, chirp_multiplied_gaussian, chirped_gaussian_norm,
                          dilated_gaussian_norm_asymptotic, limit_slope)
from core.tfa import gaussian_window
from experiments.base import Base, exponent_text
from experiments.enums import Regime
from fio.operator import apply_fio
from fio.symbols import ConstantSymbol, SymbolGrid
from phases.quadraticchirp import QuadraticChirp


class ChirpUnboundedness(Base):
    """
    Growth of ‖e^{iπx²}φ_λ‖ / ‖φ_λ‖ in M^{r1,r2} as λ→0; blows up exactly when r2 < r1
    """
    name = 'chirp-unboundedness'

    def __init__(self, cfg):
        super(ChirpUnboundedness, self).__init__(cfg)
        self.r1 = cfg.recip('r1')
        self.r2 = cfg.recip('r2')
        self.phase = QuadraticChirp()
        self.symbol = SymbolGrid.from_descriptor(ConstantSymbol(), self.grid)
        self.window = gaussian_window(self.grid, cfg.window_scale)

    def ratio(self, lam):
        signal = dilated_gaussian(lam).sample(self.grid)
        image = apply_fio(self.phase, self.symbol, signal)
        numerator = modulation_norm(image, self.r1, self.r2, None, self.window).value
        denominator = modulation_norm(signal, self.r1, self.r2, None, self.window).value
        return (numerator / denominator) ** self.cfg.d

    def predicted_slope(self):
        d = self.cfg.d

        def oracle(lam):
            chirped = chirped_gaussian_norm(chirp_multiplied_gaussian(lam, d), self.r1, self.r2)
            return chirped / dilated_gaussian_norm_asymptotic(lam, d, self.r1, self.r2)
        return limit_slope(oracle, 'small')

    def run(self):
        lambdas, values = self.sweep(Regime.small, self.ratio)
        fit = self.fit('ratio', lambdas, values)
        predicted = self.predicted_slope()
        self.check('ratio slope', predicted, fit.slope, GAUSSIAN_SLOPE_TOLERANCE)
        blows_up = fit.slope < -GAUSSIAN_SLOPE_TOLERANCE
        self.check('blow-up iff r2 < r1', float(self.r2 > self.r1), float(blows_up), 0.0, 'sign')
        self.result.details = {'r1': self.r1.label(), 'r2': self.r2.label(), 'blows_up': bool(blows_up)}
        return self.result


def chirp_unboundedness_experiment(r1, r2, cfg):
    return ChirpUnboundedness(cfg.with_values(r1=exponent_text(r1), r2=exponent_text(r2))).run().fits['ratio']
