import itertools
from core.constants import RATIO_SPREAD_BUDGET
from core.norms import modulation_norm
from core.oracles import ChirpedGaussian, chirped_gaussian_norm_asymptotic, chirped_gaussian_stft_norm
from core.recip import Recip
from core.tfa import gaussian_window
from experiments.base import Base

A_VALUES = (0.5, 1.0, 2.0)
B_VALUES = (0.0, 1.0, 4.0)
EXPONENT_PAIRS = ((Recip(1), Recip(1)), (Recip(1, 2), Recip(1, 2)), (Recip(0), Recip(1)), (Recip(1), Recip(0)))
EXACT_RTOL = 1e-6


class ChirpedOracle(Base):
    """
    Numeric modulation norms of chirped Gaussians against the closed forms
    """
    name = 'chirped-oracle'

    def run(self):
        window = gaussian_window(self.grid, self.cfg.window_scale)
        ratios = {}
        worst = 0.0
        for a, b in itertools.product(A_VALUES, B_VALUES):
            G = ChirpedGaussian(1.0, a, b)
            signal = G.sample(self.grid)
            for p, q in EXPONENT_PAIRS:
                numeric = modulation_norm(signal, p, q, None, window).value
                ratios[(a, b, p.label(), q.label())] = numeric / chirped_gaussian_norm_asymptotic(a, b, 1, p, q)
                exact = chirped_gaussian_stft_norm(G, p, q, self.cfg.window_scale)
                worst = max(worst, abs(numeric - exact) / exact)
        spread = max(ratios.values()) / min(ratios.values())
        self.check('ratio spread', 1.0, spread, RATIO_SPREAD_BUDGET - 1.0, 'ratio')
        self.check('exact window norm', 0.0, worst, EXACT_RTOL, 'relative error')

        half = Recip(1, 2)
        drift = max(abs(chirped_gaussian_norm_asymptotic(a, b, 1, half, half)
                        - chirped_gaussian_norm_asymptotic(a, 0.0, 1, half, half))
                    for a, b in itertools.product(A_VALUES, B_VALUES))
        self.check('b-independence at p = q = 2', 0.0, drift, 0.0, 'equality')
        self.result.rows = [{'series': 'a=%g b=%g p=%s q=%s' % key, 'lambda': key[0], 'value': ratio, 'fit': None}
                            for key, ratio in ratios.items()]
        self.result.details = {'spread': spread, 'max_exact_rel_error': worst}
        return self.result


def chirped_oracle_experiment(cfg):
    return ChirpedOracle(cfg).run()
