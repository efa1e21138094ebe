import logging
import numpy as np
import pandas as pd
import scipy.fft as sfft
from dataclasses import dataclass
from numpy.lib.stride_tricks import sliding_window_view
from core.constants import DEFAULT_WINDOW_SCALE, WINDOW_DECAY, NORMALIZATION_RTOL
from core.exceptions import DomainError, PreconditionError, ShapeError, DataError
from core.grid import Signal, check_same_grid, centered_dft, centered_idft, inner

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class StftMatrix:
    """
    Sampled V_g f, rows indexed by position, columns by frequency
    """
    position_grid: object
    frequency_grid: object
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=complex)
        if values.shape != (self.position_grid.n, self.frequency_grid.n):
            raise ShapeError('STFT values of shape ' + str(values.shape) + ' do not match the grids')
        if not np.all(np.isfinite(values)):
            raise DataError('STFT values must be finite')
        values.flags.writeable = False
        object.__setattr__(self, 'values', values)

    def magnitude(self):
        return np.abs(self.values)

    def scale(self, c):
        return StftMatrix(self.position_grid, self.frequency_grid, c * self.values)

    def cell(self):
        return self.position_grid.dx * self.frequency_grid.dx

    def to_frame(self, magnitude_only=False):
        x, omega = np.meshgrid(self.position_grid.points, self.frequency_grid.points, indexing='ij')
        columns = {'x': x.ravel(), 'omega': omega.ravel()}
        if magnitude_only:
            columns['magnitude'] = self.magnitude().ravel()
        else:
            columns['re'] = self.values.real.ravel()
            columns['im'] = self.values.imag.ravel()
        return pd.DataFrame(columns)


@dataclass(frozen=True, eq=False)
class Window:
    """
    Analysis window g; scale is set for Gaussian windows, whose closed form is then known
    """
    signal: Signal
    normalized: bool
    scale: float = None

    def __post_init__(self):
        if self.signal.is_zero():
            raise PreconditionError('window must be nonzero')
        if self.normalized:
            norm = np.sqrt(inner(self.signal, self.signal).real)
            if abs(norm - 1.0) > NORMALIZATION_RTOL:
                raise PreconditionError('window tagged as normalized has L2 norm ' + str(norm))

    @property
    def grid(self):
        return self.signal.grid

    @property
    def identifier(self):
        if self.scale is not None:
            return 'gaussian(scale=' + repr(self.scale) + ')'
        return 'sampled'

    def has_closed_form(self):
        return self.scale is not None

    def evaluate(self, x):
        if self.scale is None:
            raise PreconditionError('window has no closed form')
        return (2.0 * self.scale) ** 0.25 * np.exp(-np.pi * self.scale * np.asarray(x) ** 2)

    def evaluate_hat(self, xi):
        if self.scale is None:
            raise PreconditionError('window has no closed form')
        return (2.0 * self.scale) ** 0.25 / np.sqrt(self.scale) * np.exp(-np.pi * np.asarray(xi) ** 2 / self.scale)

    def shifted(self, x, omega):
        """
        M_ω T_x g
        """
        return self.signal.translate(x).modulate(omega)

    @classmethod
    def from_signal(cls, signal):
        norm = np.sqrt(inner(signal, signal).real)
        return cls(signal, abs(norm - 1.0) <= NORMALIZATION_RTOL)

    def normalize(self):
        norm = np.sqrt(inner(self.signal, self.signal).real)
        return Window(self.signal.scale(1.0 / norm), True, self.scale)


def gaussian_window(grid, scale=DEFAULT_WINDOW_SCALE):
    """
    L2-normalized Gaussian window (2γ)^{1/4} e^{-πγx²}
    """
    amplitude = (2.0 * scale) ** 0.25
    edge = amplitude * np.exp(-np.pi * scale * (grid.extent / 4) ** 2)
    edge_hat = amplitude / np.sqrt(scale) * np.exp(-np.pi * (grid.dual().extent / 4) ** 2 / scale)
    if max(edge, edge_hat) > WINDOW_DECAY:
        logger.warning('gaussian window of scale ' + str(scale) + ' is not negligible near the grid boundary')
    signal = Signal(grid, amplitude * np.exp(-np.pi * scale * grid.points ** 2))
    norm = np.sqrt(inner(signal, signal).real)
    # Riemann sums of a resolved Gaussian are exact to rounding
    return Window(signal.scale(1.0 / norm), True, float(scale))


def _translate_rows(samples):
    """
    Row a holds samples(y_k - x_a) with periodic wrap
    """
    n = samples.shape[0]
    extended = np.concatenate((samples, samples))
    starts = (n // 2 - np.arange(n)) % n
    return sliding_window_view(extended, n)[starts]


def stft(f, g):
    """
    V_g f(x, ω) = ∫ e^{-2πiωy} f(y) conj(g(y-x)) dy for every lattice point
    """
    check_same_grid(f.grid, g.grid)
    grid = f.grid
    rows = _translate_rows(np.conj(g.signal.samples)) * f.samples[None, :]
    return StftMatrix(grid, grid.dual(), grid.dx * centered_dft(rows, axis=1))


def istft(V, g):
    """
    f = ∬ V_g f(x, ω) M_ω T_x g dx dω for a unit-norm window
    """
    if not g.normalized:
        raise PreconditionError('istft needs an L2-normalized window')
    check_same_grid(V.position_grid, g.grid)
    freq = V.frequency_grid
    rows = freq.n * freq.dx * centered_idft(V.values, axis=1)
    samples = np.sum(rows * _translate_rows(g.signal.samples), axis=0) * V.position_grid.dx
    return Signal(V.position_grid, samples)


def gabor_coefficient(f, g, x, omega):
    """
    ⟨f, M_ω T_x g⟩ at a single, possibly off-lattice, point
    """
    check_same_grid(f.grid, g.grid)
    nyquist = 1.0 / (2.0 * f.grid.dx)
    if not f.grid.covers(x) or abs(omega) > nyquist:
        raise DomainError('point (' + str(x) + ', ' + str(omega) + ') outside the grid coverage')
    return inner(f, g.shifted(x, omega))


def window_change_bound(f, g0, g1, gamma):
    """
    Largest violation of |V_{g0} f| <= |⟨γ,g1⟩|^{-1} (|V_{g1} f| * |V_{g0} γ|) over the lattice
    """
    pairing = abs(inner(gamma.signal, g1.signal))
    if pairing == 0:
        raise PreconditionError('window change needs ⟨γ, g1⟩ != 0')
    lhs = stft(f, g0).magnitude()
    analysis = stft(f, g1)
    kernel = sfft.ifftshift(stft(gamma.signal, g0).magnitude())
    convolution = sfft.ifft2(sfft.fft2(analysis.magnitude()) * sfft.fft2(kernel)).real
    rhs = convolution * analysis.cell() / pairing
    return float(np.max(lhs - rhs))


def stft_to_csv(V, path, magnitude_only=False):
    V.to_frame(magnitude_only).to_csv(path, index=False)
    logger.info('stft written to ' + str(path))
