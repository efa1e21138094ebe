import logging
import numpy as np
import pandas as pd
from dataclasses import dataclass, field, replace
from core.constants import SUPPORT_TAIL, DEFAULT_WINDOW_SCALE
from core.exceptions import PreconditionError, DataError
from core.grid import fourier, inverse_fourier, lebesgue_norm
from core.recip import Recip
from core.tfa import stft, gaussian_window

logger = logging.getLogger(__name__)


def japanese_bracket(x):
    return np.sqrt(1.0 + np.abs(x) ** 2)


@dataclass(frozen=True)
class WeightSpec:
    """
    Polynomial weight v_{s1,s2}(x, ω) = ⟨x⟩^{s1} ⟨ω⟩^{s2}
    tensor marks the weight as extended by 1 to further variables
    """
    s1: float = 0.0
    s2: float = 0.0
    tensor: bool = False

    def is_trivial(self):
        return self.s1 == 0 and self.s2 == 0

    def evaluate(self, x, omega):
        return japanese_bracket(x) ** self.s1 * japanese_bracket(omega) ** self.s2

    def is_moderate(self, probe=None):
        """
        Sampled check of w(z+y) <= 2^{s/2} v_s(z) w(y), s = |s1| + |s2|
        """
        if probe is None:
            probe = np.linspace(-8.0, 8.0, 17)
        s = abs(self.s1) + abs(self.s2)
        constant = 2.0 ** (s / 2.0) * (1.0 + 1e-12)
        zx, zw, yx, yw = np.meshgrid(probe, probe, probe, probe, indexing='ij')
        lhs = self.evaluate(zx + yx, zw + yw)
        moderate = japanese_bracket(np.sqrt(zx ** 2 + zw ** 2)) ** s
        return bool(np.all(lhs <= constant * moderate * self.evaluate(yx, yw)))

    def describe(self):
        return {'s1': self.s1, 's2': self.s2, 'tensor': self.tensor}

    def extended(self):
        """
        The same weight extended by 1 to the position variables of a symbol, i.e. 1 ⊗ w
        """
        return replace(self, tensor=True)


UNWEIGHTED = WeightSpec()


@dataclass(frozen=True)
class NormResult:
    value: float
    p: Recip
    q: Recip
    weight: WeightSpec
    window_id: str
    grid: dict = field(default_factory=dict)

    def __post_init__(self):
        if not np.isfinite(self.value) or self.value < 0:
            raise DataError('norm value must be finite and nonnegative, got ' + str(self.value))

    def as_record(self):
        record = {'p': self.p.label(), 'q': self.q.label(), 'value': self.value, 'window': self.window_id}
        record.update(self.weight.describe())
        record.update(self.grid)
        return record


def _neighbour(values, index):
    return np.take_along_axis(values, np.expand_dims(index, 0), axis=0)[0]


def peak_reduce(values, axis):
    """
    Max along one axis, lifted to the vertex of the log-parabola through the sampled peak and its two neighbours
    """
    values = np.moveaxis(np.asarray(values, dtype=float), axis, 0)
    size = values.shape[0]
    index = np.asarray(np.argmax(values, axis=0))
    peak = _neighbour(values, index)
    left = _neighbour(values, np.clip(index - 1, 0, size - 1))
    right = _neighbour(values, np.clip(index + 1, 0, size - 1))
    interior = (index > 0) & (index < size - 1) & (left > 0) & (right > 0)
    with np.errstate(divide='ignore', invalid='ignore'):
        l, c, r = np.log(left), np.log(peak), np.log(right)
        curvature = 2.0 * c - l - r
        lift = np.where(interior & (curvature > 0), (l - r) ** 2 / (8.0 * curvature), 0.0)
    return peak * np.exp(lift)


def lp_reduce(values, r, axis, cell, refine=False):
    """
    Discrete L^p reduction along one axis; r is the reciprocal exponent.
    With refine the sup of smooth data such as an STFT modulus is read off between samples
    """
    if r == 0:
        return peak_reduce(values, axis) if refine else np.max(values, axis=axis)
    return (np.sum(values ** (1.0 / float(r)), axis=axis) * cell) ** float(r)


def mixed_norm(V, p, q, w=None, refine=False):
    """
    Inner L^p over position per frequency, outer L^q over frequency
    """
    magnitude = V.magnitude()
    if w is not None and not w.is_trivial():
        magnitude = magnitude * w.evaluate(V.position_grid.points[:, None], V.frequency_grid.points[None, :])
    rows = lp_reduce(magnitude, p, 0, V.position_grid.dx, refine)
    return float(lp_reduce(rows, q, 0, V.frequency_grid.dx, refine))


def _window_for(f, g):
    if g is None:
        return gaussian_window(f.grid)
    if not g.normalized:
        raise PreconditionError('modulation norms need an L2-normalized window')
    return g


def modulation_norm(f, p, q, w=None, g=None):
    """
    ‖f‖_{M^{p,q}_w} = ‖V_g f‖_{L^{p,q}_w}
    """
    g = _window_for(f, g)
    w = w if w is not None else UNWEIGHTED
    value = mixed_norm(stft(f, g), p, q, w, refine=True)
    return NormResult(value, p, q, w, g.identifier, f.grid.describe())


def amalgam_norm(f, p, q, g=None):
    """
    ‖f‖_{W(FL^p, L^q)} = ‖F^{-1} f‖_{M^{p,q}}
    """
    return modulation_norm(inverse_fourier(f), p, q, None, g)


def tensor_modulation_norm(factors, p, q, scale=DEFAULT_WINDOW_SCALE):
    """
    Modulation norm of f1 ⊗ ... ⊗ fk with a tensor Gaussian window; Fubini splits it into factors
    """
    value = 1.0
    for factor in factors:
        value *= modulation_norm(factor, p, q, None, gaussian_window(factor.grid, scale)).value
    return value


def norm_table(f, pairs, w=None, g=None):
    """
    Norms of one signal over a list of (p, q) pairs, sharing a single STFT
    """
    g = _window_for(f, g)
    w = w if w is not None else UNWEIGHTED
    V = stft(f, g)
    rows = []
    for p, q in pairs:
        value = mixed_norm(V, p, q, w, refine=True)
        rows.append({'p': p.label(), 'q': q.label(), 's1': w.s1, 's2': w.s2, 'value': value})
    return pd.DataFrame(rows, columns=['p', 'q', 's1', 's2', 'value'])


@dataclass
class EquivalenceReport:
    """
    Norm ratios across one exponent with the spread max/min
    """
    ratios: dict
    spread: float = None
    flags: list = field(default_factory=list)

    def as_record(self):
        return {'ratios': {k: float(v) for k, v in self.ratios.items()}, 'spread': self.spread, 'flags': self.flags}


def _spread(ratios):
    values = list(ratios.values())
    if min(values) <= 0:
        return None
    return max(values) / min(values)


def _check_tail(samples, coordinates, radius, what):
    outside = np.abs(coordinates) > radius
    peak = np.max(np.abs(samples))
    if peak > 0 and np.any(outside) and np.max(np.abs(samples[outside])) > SUPPORT_TAIL * peak:
        raise PreconditionError(what + ' is not negligible beyond radius ' + str(radius))


def compact_support_norm_check(f, support_radius, q, p_grid, g=None):
    """
    ‖f‖_{M^{p,q}} / ‖Ff‖_{L^q} across p for a compactly supported f
    """
    _check_tail(f.samples, f.grid.points, support_radius, 'signal')
    report = EquivalenceReport({})
    reference = lebesgue_norm(fourier(f), q)
    for p in p_grid:
        value = modulation_norm(f, p, q, None, g).value
        report.ratios[p.label()] = value / reference if reference > 0 else 0.0
    report.spread = _spread(report.ratios)
    if report.spread is None:
        report.flags.append('spread undefined')
    return report


def band_limited_norm_check(f, band_radius, p, q_grid, g=None):
    """
    ‖f‖_{M^{p,q}} / ‖f‖_{L^p} across q for f with compactly supported Fourier transform
    """
    spectrum = fourier(f)
    _check_tail(spectrum.samples, spectrum.grid.points, band_radius, 'spectrum')
    report = EquivalenceReport({})
    reference = lebesgue_norm(f, p)
    for q in q_grid:
        value = modulation_norm(f, p, q, None, g).value
        report.ratios[q.label()] = value / reference if reference > 0 else 0.0
    report.spread = _spread(report.ratios)
    if report.spread is None:
        report.flags.append('spread undefined')
    return report
