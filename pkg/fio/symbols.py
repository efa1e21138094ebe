import logging
import numpy as np
import pandas as pd
from dataclasses import dataclass
from core.exceptions import ShapeError, DataError, PreconditionError, UsageError
from core.grid import Grid1D
from core.oracles import dilated_gaussian, bump

logger = logging.getLogger(__name__)


class ConstantSymbol:
    def __init__(self, value=1.0):
        self.value = value

    def __call__(self, x, eta):
        shape = np.broadcast(np.asarray(x), np.asarray(eta)).shape
        return np.full(shape, self.value, dtype=complex)


class GaussianSymbol:
    """
    σ(x, η) = e^{-π(a_x x² + a_η η²)}
    """

    def __init__(self, a_x=1.0, a_eta=1.0):
        self.a_x = a_x
        self.a_eta = a_eta

    def __call__(self, x, eta):
        return np.exp(-np.pi * (self.a_x * np.asarray(x) ** 2 + self.a_eta * np.asarray(eta) ** 2)) + 0j


class TensorSymbol:
    """
    σ(x, η) = f(x) g(η) for two one-variable callables
    """

    def __init__(self, first, second):
        self.first = first
        self.second = second

    def __call__(self, x, eta):
        return np.asarray(self.first(x)) * np.asarray(self.second(eta)) + 0j


def gaussian_pair(lam):
    """
    σ_λ = φ_{λ/√2} ⊗ φ_{1/λ}
    """
    return TensorSymbol(dilated_gaussian(lam / np.sqrt(2.0)).evaluate, dilated_gaussian(1.0 / lam).evaluate)


def chirped_gaussian_pair(first, second):
    return TensorSymbol(first.evaluate, second.evaluate)


def bump_pair():
    return TensorSymbol(bump, bump)


def symbol_descriptor(name, lam=1.0):
    """
    Closed-form symbol families addressable from the config
    """
    if name == 'constant':
        return ConstantSymbol()
    if name == 'gaussian':
        return GaussianSymbol()
    if name == 'gaussian-pair':
        return gaussian_pair(lam)
    if name == 'bump':
        return bump_pair()
    raise UsageError('unknown symbol family: ' + str(name))


@dataclass(frozen=True, eq=False)
class SymbolGrid:
    """
    Samples of σ(x, η) on position_grid × frequency_grid
    """
    position_grid: Grid1D
    frequency_grid: Grid1D
    samples: np.ndarray
    descriptor: object = None

    def __post_init__(self):
        samples = np.array(self.samples, dtype=complex)
        if samples.shape != (self.position_grid.n, self.frequency_grid.n):
            raise ShapeError('symbol samples of shape ' + str(samples.shape) + ' do not match the grids')
        if not np.all(np.isfinite(samples)):
            raise DataError('symbol samples must be finite')
        samples.flags.writeable = False
        object.__setattr__(self, 'samples', samples)

    @classmethod
    def from_descriptor(cls, descriptor, position_grid, frequency_grid=None):
        frequency_grid = frequency_grid if frequency_grid is not None else position_grid.dual()
        x = position_grid.points[:, None]
        eta = frequency_grid.points[None, :]
        return cls(position_grid, frequency_grid, descriptor(x, eta), descriptor)

    def evaluate(self, x, eta):
        if self.descriptor is None:
            raise PreconditionError('symbol has no closed-form descriptor for off-grid evaluation')
        return self.descriptor(x, eta)

    def scale(self, c):
        descriptor = None
        if self.descriptor is not None:
            parent = self.descriptor
            descriptor = lambda x, eta: c * parent(x, eta)
        return SymbolGrid(self.position_grid, self.frequency_grid, c * self.samples, descriptor)

    def l2_norm(self):
        return float(np.sqrt(np.sum(np.abs(self.samples) ** 2) * self.position_grid.dx * self.frequency_grid.dx))

    def is_zero(self):
        return not np.any(self.samples)

    def to_csv(self, path):
        x, eta = np.meshgrid(self.position_grid.points, self.frequency_grid.points, indexing='ij')
        df = pd.DataFrame({'x': x.ravel(), 'eta': eta.ravel(),
                           're': self.samples.real.ravel(), 'im': self.samples.imag.ravel()})
        df.to_csv(path, index=False)
        logger.info('symbol written to ' + str(path))

    @classmethod
    def from_csv(cls, path):
        df = pd.read_csv(path)
        missing = {'x', 'eta', 're', 'im'} - set(df.columns)
        if missing:
            raise DataError('symbol CSV misses columns: ' + ', '.join(sorted(missing)))
        xs = np.unique(df['x'].values)
        etas = np.unique(df['eta'].values)
        if len(xs) < 2 or len(etas) < 2 or len(df) != len(xs) * len(etas):
            raise DataError('symbol CSV is not a full tensor grid')
        df = df.sort_values(['x', 'eta'])
        position_grid = Grid1D(len(xs), float(xs[1] - xs[0]))
        frequency_grid = Grid1D(len(etas), float(etas[1] - etas[0]))
        samples = (df['re'].values + 1j * df['im'].values).reshape(len(xs), len(etas))
        return cls(position_grid, frequency_grid, samples)
