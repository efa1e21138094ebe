import logging
import numpy as np
import pandas as pd
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from core.common import geometric_sweep
from core.constants import LAMBDA_MIN, LAMBDA_MAX
from core.exceptions import UsageError
from core.grid import make_grid, Signal
from core.oracles import dilated_gaussian, chirp_multiplied_gaussian, bump
from core.tfa import gaussian_window
from experiments.enums import CheckStatus, Regime
from lib.scaling import fit_scaling

logger = logging.getLogger(__name__)


@dataclass
class CheckRecord:
    """
    One predicted-vs-measured comparison; predicted values always come from oracles or checkers
    """
    experiment: str
    label: str
    predicted: float
    measured: float
    tolerance: float
    kind: str = 'slope'

    @property
    def status(self):
        if abs(self.measured - self.predicted) <= self.tolerance:
            return CheckStatus.passed
        return CheckStatus.failed

    @property
    def passed(self):
        return self.status == CheckStatus.passed

    def as_record(self):
        record = {'experiment': self.experiment, 'check': self.label, 'kind': self.kind,
                  'tolerance': self.tolerance, 'pass': self.passed}
        if self.kind == 'slope':
            record.update({'predicted_slope': self.predicted, 'fitted_slope': self.measured})
        else:
            record.update({'predicted': self.predicted, 'measured': self.measured})
        return record


@dataclass
class ExperimentResult:
    name: str
    checks: list = field(default_factory=list)
    fits: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def table(self):
        return pd.DataFrame(self.rows, columns=['series', 'lambda', 'value', 'fit'])

    def summary(self):
        return {
            'experiment': self.name,
            'pass': self.passed,
            'checks': [check.as_record() for check in self.checks],
            'fits': {name: fit.as_record() for name, fit in self.fits.items()},
            'details': self.details,
        }


def input_signal(family, grid, lam=1.0):
    """
    Sampled member of an input family: gaussian φ_λ, chirped-gaussian e^{iπx²}φ_λ, or the chirped bump h e^{-πiλx²}
    """
    if family == 'gaussian':
        return dilated_gaussian(lam).sample(grid)
    if family == 'chirped-gaussian':
        return chirp_multiplied_gaussian(lam).sample(grid)
    if family == 'bump':
        x = grid.points
        return Signal(grid, bump(x) * np.exp(-1j * np.pi * lam * x ** 2))
    raise UsageError('unknown input family: ' + str(family))


class Base(ABC):
    """
    Base class for all experiments
    """
    name = None

    def __init__(self, cfg):
        super(Base, self).__init__()
        self.cfg = cfg
        self.grid = make_grid(cfg.n, cfg.extent)
        self.result = ExperimentResult(self.name)

    @abstractmethod
    def run(self):
        """
        Runs the experiment and returns an ExperimentResult
        """
        None

    def lambda_range(self, regime):
        return self.cfg.small_range if regime == Regime.small else self.cfg.large_range

    def regime_window(self, regime):
        scale = self.cfg.small_window_scale if regime == Regime.small else self.cfg.large_window_scale
        return gaussian_window(self.grid, scale)

    def sweep(self, regime, func):
        """
        Evaluates func over the geometric sweep of one regime, in sweep order
        """
        lo, hi = self.lambda_range(regime)
        if lo < LAMBDA_MIN or hi > LAMBDA_MAX:
            logger.warning(self.name + ': sweep ' + str((lo, hi)) + ' may alias on the configured grid')
        lambdas = geometric_sweep(lo, hi, self.cfg.points_per_octave)
        if self.cfg.workers > 1:
            with ThreadPoolExecutor(max_workers=self.cfg.workers) as pool:
                values = list(pool.map(func, lambdas))
        else:
            values = [func(lam) for lam in lambdas]
        logger.debug(self.name + ': evaluated ' + str(len(lambdas)) + ' points on ' + regime.name)
        return lambdas, np.asarray(values, dtype=float)

    def fit(self, series, lambdas, values):
        fit = fit_scaling(lambdas, values)
        self.result.fits[series] = fit
        for lam, value, fitted in zip(lambdas, values, fit.predict(lambdas)):
            self.result.rows.append({'series': series, 'lambda': lam, 'value': value, 'fit': fitted})
        return fit

    def check(self, label, predicted, measured, tolerance, kind='slope'):
        record = CheckRecord(self.name, label, float(predicted), float(measured), float(tolerance), kind)
        self.result.checks.append(record)
        return record


def exponent_text(value):
    """
    Recip(1/2) -> '2'; exponent strings pass through
    """
    if hasattr(value, 'label'):
        return value.label()
    return str(value)
