from core.constants import GAUSSIAN_SLOPE_TOLERANCE
from core.norms import modulation_norm
from core.oracles import dilated_gaussian, schrodinger_on_gaussian, chirped_gaussian_norm, limit_slope
from experiments.base import Base, exponent_text
from experiments.enums import Regime
from fio.operator import apply_fio
from fio.symbols import ConstantSymbol, SymbolGrid
from phases.schrodingerfree import SchrodingerFree


class SchrodingerScaling(Base):
    """
    ‖T φ_λ‖_{M^{t1,t2}} for the free Schrödinger multiplier: slopes -d/t1 (λ→0) and -d/t2' (λ→∞)
    """
    name = 'schrodinger-scaling'

    def __init__(self, cfg):
        super(SchrodingerScaling, self).__init__(cfg)
        self.t1 = cfg.recip('t1')
        self.t2 = cfg.recip('t2')
        self.phase = SchrodingerFree()
        self.symbol = SymbolGrid.from_descriptor(ConstantSymbol(), self.grid)

    def norm(self, regime):
        window = self.regime_window(regime)

        def evaluate(lam):
            image = apply_fio(self.phase, self.symbol, dilated_gaussian(lam).sample(self.grid))
            return modulation_norm(image, self.t1, self.t2, None, window).value ** self.cfg.d
        return evaluate

    def run(self):
        d = self.cfg.d
        for regime in Regime:
            predicted = limit_slope(lambda lam: chirped_gaussian_norm(schrodinger_on_gaussian(lam, d), self.t1, self.t2),
                                    regime.name)
            lambdas, values = self.sweep(regime, self.norm(regime))
            fit = self.fit(regime.name, lambdas, values)
            self.check(regime.name + '-lambda slope', predicted, fit.slope, GAUSSIAN_SLOPE_TOLERANCE)
        self.result.details = {'t1': self.t1.label(), 't2': self.t2.label()}
        return self.result


def schrodinger_scaling_experiment(t1, t2, cfg):
    result = SchrodingerScaling(cfg.with_values(t1=exponent_text(t1), t2=exponent_text(t2))).run()
    return result.fits['small'], result.fits['large']
