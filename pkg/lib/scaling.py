import numpy as np
from dataclasses import dataclass
from scipy import stats
from core.constants import MIN_FIT_POINTS
from core.exceptions import DataError


@dataclass(frozen=True)
class ScalingFit:
    """
    Least-squares line through (log λ, log value)
    """
    lambdas: tuple
    values: tuple
    slope: float
    intercept: float
    rsquared: float

    def predict(self, lam):
        return np.exp(self.intercept) * np.asarray(lam) ** self.slope

    def as_record(self):
        return {'slope': self.slope, 'intercept': self.intercept, 'rsquared': self.rsquared,
                'points': len(self.lambdas), 'lambda_min': min(self.lambdas), 'lambda_max': max(self.lambdas)}


def fit_scaling(lambdas, values):
    lambdas = np.asarray(lambdas, dtype=float)
    values = np.asarray(values, dtype=float)
    if lambdas.shape != values.shape or lambdas.size < MIN_FIT_POINTS:
        raise DataError('scaling fit needs at least ' + str(MIN_FIT_POINTS) + ' paired points')
    if np.any(lambdas <= 0) or np.any(values <= 0) or not np.all(np.isfinite(values)):
        raise DataError('scaling fit needs positive finite values')
    log_lambda, log_value = np.log(lambdas), np.log(values)
    if np.ptp(log_value) == 0:
        return ScalingFit(tuple(lambdas), tuple(values), 0.0, float(log_value[0]), 1.0)
    fit = stats.linregress(log_lambda, log_value)
    rsquared = float(min(max(fit.rvalue ** 2, 0.0), 1.0))
    return ScalingFit(tuple(lambdas), tuple(values), float(fit.slope), float(fit.intercept), rsquared)
