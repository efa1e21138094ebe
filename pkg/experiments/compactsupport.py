from core.constants import RATIO_SPREAD_BUDGET
from core.grid import Signal, inverse_fourier
from core.norms import compact_support_norm_check, band_limited_norm_check
from core.oracles import bump
from core.recip import Recip
from core.tfa import gaussian_window
from experiments.base import Base

EXPONENTS = (Recip(1), Recip(1, 2), Recip(0))
SUPPORT_RADIUS = 1.0


class CompactSupport(Base):
    """
    ‖h‖_{M^{p,q}} ≍ ‖F h‖_{L^q} across p, and the band-limited dual across q
    """
    name = 'compact-support'

    def run(self):
        g = gaussian_window(self.grid, self.cfg.window_scale)
        h = Signal(self.grid, bump(self.grid.points))
        spectral = self.grid.dual()
        band_limited = inverse_fourier(Signal(spectral, bump(spectral.points)))
        reports = {}
        for exponent in EXPONENTS:
            report = compact_support_norm_check(h, SUPPORT_RADIUS, exponent, EXPONENTS, g)
            reports['loc q=' + exponent.label()] = report.as_record()
            self.check('compact support spread at q=' + exponent.label(), 1.0, report.spread,
                       RATIO_SPREAD_BUDGET - 1.0, 'ratio')
            report = band_limited_norm_check(band_limited, SUPPORT_RADIUS, exponent, EXPONENTS, g)
            reports['loc2 p=' + exponent.label()] = report.as_record()
            self.check('band limited spread at p=' + exponent.label(), 1.0, report.spread,
                       RATIO_SPREAD_BUDGET - 1.0, 'ratio')
        self.result.details = reports
        return self.result


def compact_support_experiment(cfg):
    return CompactSupport(cfg).run()
