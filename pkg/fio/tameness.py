import logging
import numpy as np
from dataclasses import dataclass, field
from core.exceptions import ParameterError

logger = logging.getLogger(__name__)

GROWTH_RTOL = 1e-9


@dataclass(frozen=True)
class Rectangle:
    """
    Working rectangle [-x_radius, x_radius] × [-eta_radius, eta_radius]
    """
    x_radius: float = 8.0
    eta_radius: float = 8.0

    def __post_init__(self):
        if not (self.x_radius > 0 and self.eta_radius > 0):
            raise ParameterError('rectangle radii must be positive, got ' + str((self.x_radius, self.eta_radius)))

    def doubled(self):
        return Rectangle(2.0 * self.x_radius, 2.0 * self.eta_radius)

    def mesh(self, samples):
        x = np.linspace(-self.x_radius, self.x_radius, samples)
        eta = np.linspace(-self.eta_radius, self.eta_radius, samples)
        return np.meshgrid(x, eta, indexing='ij')

    def describe(self):
        return {'x_radius': self.x_radius, 'eta_radius': self.eta_radius}


@dataclass(frozen=True)
class Condition:
    holds: bool
    witness: float


@dataclass
class PhaseReport:
    """
    Grid-sampled tameness witnesses of a phase on a working rectangle
    """
    min_mixed_hessian_abs: float
    second_deriv_bound: float
    delta: float
    rectangle: Rectangle
    conditions: dict = field(default_factory=dict)

    @property
    def tame(self):
        return bool(self.min_mixed_hessian_abs >= self.delta and np.isfinite(self.second_deriv_bound))

    def holds(self, name):
        return self.conditions[name].holds

    def as_record(self):
        record = {
            'tame': self.tame,
            'min_mixed_hessian_abs': self.min_mixed_hessian_abs,
            'second_deriv_bound': self.second_deriv_bound,
            'delta': self.delta,
            'rectangle': self.rectangle.describe(),
        }
        for name, condition in self.conditions.items():
            record[name] = {'holds': condition.holds, 'witness': condition.witness}
        return record


def _oscillation(values, axis):
    spread = np.max(values, axis=axis) - np.min(values, axis=axis)
    return float(np.max(spread))


def _bounded_oscillation(gradient, rectangle, samples, axis):
    """
    Oscillation of a gradient along one variable, compared between the rectangle and its double
    """
    x, eta = rectangle.mesh(samples)
    inner = _oscillation(np.broadcast_to(gradient(x, eta), x.shape), axis)
    x, eta = rectangle.doubled().mesh(samples)
    outer = _oscillation(np.broadcast_to(gradient(x, eta), x.shape), axis)
    holds = outer <= inner * (1.0 + GROWTH_RTOL) + GROWTH_RTOL
    return Condition(bool(holds), outer)


def check_tame(phase, rect=None, delta=1e-3, samples=65):
    """
    Samples the non-degeneracy and derivative bounds of a phase together with the
    auxiliary conditions used by the boundedness theorems:

      phasegrad   sup |∇xΦ(x,η) - ∇xΦ(x',η)| < ∞
      fase-bis    sup |∇ηΦ(x,η) - ∇ηΦ(x,η')| < ∞
      d2fix       |Φ_xx| >= δ
      detcond01   |Φ_ηη| >= δ

    Mathematical failures are reported, never raised.
    """
    if not delta > 0:
        raise ParameterError('delta must be positive, got ' + str(delta))
    rect = rect if rect is not None else Rectangle()
    x, eta = rect.mesh(samples)
    xx, xeta, etaeta = phase.hessian(x, eta)
    bound = float(max(np.max(np.abs(xx)), np.max(np.abs(xeta)), np.max(np.abs(etaeta))))
    report = PhaseReport(float(np.min(np.abs(xeta))), bound, float(delta), rect)

    min_xx = float(np.min(np.abs(xx)))
    min_etaeta = float(np.min(np.abs(etaeta)))
    report.conditions['d2fix'] = Condition(min_xx >= delta, min_xx)
    report.conditions['detcond01'] = Condition(min_etaeta >= delta, min_etaeta)
    report.conditions['phasegrad'] = _bounded_oscillation(phase.grad_x, rect, samples, 0)
    report.conditions['fase-bis'] = _bounded_oscillation(phase.grad_eta, rect, samples, 1)

    if not report.tame:
        logger.warning('phase ' + str(phase.describe()) + ' is not tame on ' + str(rect.describe()))
    return report
