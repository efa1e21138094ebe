from core.constants import GAUSSIAN_SLOPE_TOLERANCE
from core.norms import modulation_norm
from core.oracles import dilated_gaussian, dilated_gaussian_limit_exponents
from experiments.base import Base, exponent_text
from experiments.enums import Regime


class GaussianDilation(Base):
    """
    Small and large λ slopes of ‖φ_λ‖_{M^{r1,r2}} against (-d/r1, -d/r2')
    """
    name = 'gaussian-dilation'

    def __init__(self, cfg):
        super(GaussianDilation, self).__init__(cfg)
        self.r1 = cfg.recip('r1')
        self.r2 = cfg.recip('r2')

    def norm(self, regime):
        window = self.regime_window(regime)

        def evaluate(lam):
            signal = dilated_gaussian(lam).sample(self.grid)
            return modulation_norm(signal, self.r1, self.r2, None, window).value ** self.cfg.d
        return evaluate

    def run(self):
        predicted = dict(zip(Regime, dilated_gaussian_limit_exponents(self.r1, self.r2, self.cfg.d)))
        for regime in Regime:
            lambdas, values = self.sweep(regime, self.norm(regime))
            fit = self.fit(regime.name, lambdas, values)
            self.check(regime.name + '-lambda slope', predicted[regime], fit.slope, GAUSSIAN_SLOPE_TOLERANCE)
        self.result.details = {'r1': self.r1.label(), 'r2': self.r2.label()}
        return self.result


def gaussian_dilation_experiment(r1, r2, cfg):
    """
    Returns the (small-λ, large-λ) fits
    """
    result = GaussianDilation(cfg.with_values(r1=exponent_text(r1), r2=exponent_text(r2))).run()
    return result.fits['small'], result.fits['large']
