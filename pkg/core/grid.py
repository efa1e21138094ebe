import math
import logging
import numpy as np
import pandas as pd
import scipy.fft as sfft
from dataclasses import dataclass, field
from core.constants import GRID_RTOL, SIGNAL_FORMAT_VERSION
from core.exceptions import ParameterError, ShapeError, DataError

logger = logging.getLogger(__name__)


def is_power_of_two(n):
    return isinstance(n, (int, np.integer)) and n >= 2 and (n & (n - 1)) == 0


@dataclass(frozen=True, eq=False)
class Grid1D:
    """
    Uniform periodic grid x_k = -L/2 + k*dx, k = 0..n-1
    """
    n: int
    dx: float

    def __post_init__(self):
        if not is_power_of_two(self.n):
            raise ParameterError('grid size must be a power of two >= 2, got ' + str(self.n))
        if not self.dx > 0 or not math.isfinite(self.dx):
            raise ParameterError('grid spacing must be positive, got ' + str(self.dx))
        object.__setattr__(self, 'n', int(self.n))
        object.__setattr__(self, 'dx', float(self.dx))

    @property
    def extent(self):
        return self.n * self.dx

    @property
    def dxi(self):
        return 1.0 / self.extent

    @property
    def points(self):
        return (np.arange(self.n) - self.n // 2) * self.dx

    @property
    def frequencies(self):
        return (np.arange(self.n) - self.n // 2) * self.dxi

    def dual(self):
        """
        Frequency grid reinterpreted as a Grid1D (spacing 1/L, extent 1/dx)
        """
        return Grid1D(self.n, self.dxi)

    def index_of(self, x):
        """
        Index of a lattice-aligned coordinate, None when x is off the lattice
        """
        position = x / self.dx + self.n // 2
        index = int(round(position))
        if abs(position - index) > 1e-9 or not 0 <= index < self.n:
            return None
        return index

    def covers(self, x):
        return -self.extent / 2 <= x <= self.extent / 2

    def __eq__(self, other):
        if not isinstance(other, Grid1D):
            return NotImplemented
        return self.n == other.n and math.isclose(self.dx, other.dx, rel_tol=GRID_RTOL)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.n)

    def describe(self):
        return {'n': self.n, 'extent': self.extent, 'dx': self.dx}


@dataclass(frozen=True, eq=False)
class Signal:
    """
    Complex samples of a function on a Grid1D
    """
    grid: Grid1D
    samples: np.ndarray
    warnings: tuple = field(default=())

    def __post_init__(self):
        samples = np.array(self.samples, dtype=complex).reshape(-1)
        if samples.shape[0] != self.grid.n:
            raise ShapeError('signal has ' + str(samples.shape[0]) + ' samples, grid has ' + str(self.grid.n))
        if not np.all(np.isfinite(samples)):
            raise DataError('signal samples must be finite')
        samples.flags.writeable = False
        object.__setattr__(self, 'samples', samples)
        object.__setattr__(self, 'warnings', tuple(self.warnings))

    @classmethod
    def from_function(cls, grid, func):
        return cls(grid, func(grid.points))

    @classmethod
    def zeros(cls, grid):
        return cls(grid, np.zeros(grid.n, dtype=complex))

    def with_samples(self, samples):
        return Signal(self.grid, samples)

    def with_warning(self, message):
        return Signal(self.grid, self.samples, self.warnings + (message,))

    def scale(self, c):
        return self.with_samples(c * self.samples)

    def add(self, other):
        check_same_grid(self.grid, other.grid)
        return self.with_samples(self.samples + other.samples)

    def modulate(self, nu):
        """
        M_ν f(x) = e^{2πiνx} f(x)
        """
        return self.with_samples(np.exp(2j * np.pi * nu * self.grid.points) * self.samples)

    def translate(self, u):
        """
        T_u f(x) = f(x-u) with periodic wrap; off-lattice shifts are Fourier interpolated
        """
        index = self.grid.index_of(u) if self.grid.covers(u) else None
        if index is not None:
            return self.with_samples(np.roll(self.samples, index - self.grid.n // 2))
        spectrum = fourier(self)
        shifted = spectrum.with_samples(np.exp(-2j * np.pi * u * spectrum.grid.points) * spectrum.samples)
        return Signal(self.grid, inverse_fourier(shifted).samples)

    def is_zero(self):
        return not np.any(self.samples)


def make_grid(n, extent):
    """
    Grid with n points covering [-extent/2, extent/2)
    """
    if not is_power_of_two(n):
        raise ParameterError('grid size must be a power of two >= 2, got ' + str(n))
    if not extent > 0:
        raise ParameterError('grid extent must be positive, got ' + str(extent))
    return Grid1D(n, float(extent) / n)


def check_same_grid(first, second):
    if first != second:
        raise ShapeError('grid mismatch: ' + str(first.describe()) + ' vs ' + str(second.describe()))


def centered_dft(values, axis=-1):
    return sfft.fftshift(sfft.fft(sfft.ifftshift(values, axes=axis), axis=axis), axes=axis)


def centered_idft(values, axis=-1):
    return sfft.fftshift(sfft.ifft(sfft.ifftshift(values, axes=axis), axis=axis), axes=axis)


def fourier(f):
    """
    Ff(ξ) = ∫ f(x) e^{-2πixξ} dx as a dx-weighted centered DFT, returned on the dual grid
    """
    return Signal(f.grid.dual(), f.grid.dx * centered_dft(f.samples))


def inverse_fourier(spectrum):
    """
    Inverse of fourier: f(x) = ∫ Ff(ξ) e^{2πixξ} dξ
    """
    grid = spectrum.grid
    return Signal(grid.dual(), grid.n * grid.dx * centered_idft(spectrum.samples))


def inner(f, g):
    """
    ⟨f, g⟩ = Σ f(x_k) conj(g(x_k)) dx
    """
    check_same_grid(f.grid, g.grid)
    return complex(np.vdot(g.samples, f.samples) * f.grid.dx)


def lebesgue_norm(f, p):
    """
    dx-weighted L^p norm; p is a reciprocal, 0 meaning the sup norm
    """
    magnitude = np.abs(f.samples)
    if p == 0:
        return float(magnitude.max())
    exponent = 1.0 / float(p)
    return float((np.sum(magnitude ** exponent) * f.grid.dx) ** float(p))


def signal_to_csv(signal, path):
    df = pd.DataFrame({'x': signal.grid.points, 're': signal.samples.real, 'im': signal.samples.imag})
    df.to_csv(path, index=False)
    logger.info('signal written to ' + str(path))


def signal_from_csv(path):
    df = pd.read_csv(path)
    missing = {'x', 're', 'im'} - set(df.columns)
    if missing:
        raise DataError('signal CSV misses columns: ' + ', '.join(sorted(missing)))
    x = df['x'].values
    if len(x) < 2:
        raise DataError('signal CSV needs at least two rows')
    grid = Grid1D(len(x), float(x[1] - x[0]))
    if not np.allclose(x, grid.points, rtol=0, atol=1e-9 * grid.extent):
        raise DataError('signal CSV is not sampled on a centered uniform grid')
    return Signal(grid, df['re'].values + 1j * df['im'].values)


def save_signal(path, signal):
    np.savez(path, format_version=SIGNAL_FORMAT_VERSION, n=signal.grid.n, dx=signal.grid.dx,
             re=signal.samples.real, im=signal.samples.imag)


def load_signal(path):
    with np.load(path) as data:
        version = int(data['format_version'])
        if version != SIGNAL_FORMAT_VERSION:
            raise DataError('unsupported signal format version ' + str(version))
        grid = Grid1D(int(data['n']), float(data['dx']))
        return Signal(grid, data['re'] + 1j * data['im'])
