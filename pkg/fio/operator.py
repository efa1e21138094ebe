import logging
import numpy as np
from core.constants import BOUNDARY_DECAY
from core.exceptions import ShapeError
from core.grid import Signal, check_same_grid, fourier, inverse_fourier, inner
from fio.symbols import SymbolGrid
from phases.adjoint import Adjoint

logger = logging.getLogger(__name__)


def _boundary_ratio(spectrum):
    magnitude = np.abs(spectrum.samples)
    peak = magnitude.max()
    if peak == 0:
        return 0.0
    edge = max(spectrum.grid.n // 32, 1)
    return float(max(magnitude[:edge].max(), magnitude[-edge:].max()) / peak)


def apply_fio(phase, sigma, f):
    """
    Tf(x) = ∫ e^{2πiΦ(x,η)} σ(x,η) f̂(η) dη by direct quadrature over the frequency grid
    """
    check_same_grid(sigma.position_grid, f.grid)
    spectrum = fourier(f)
    check_same_grid(sigma.frequency_grid, spectrum.grid)
    x = sigma.position_grid.points[:, None]
    eta = sigma.frequency_grid.points[None, :]
    kernel = np.exp(2j * np.pi * phase.phase(x, eta)) * sigma.samples
    result = Signal(f.grid, kernel @ spectrum.samples * spectrum.grid.dx)

    ratio = _boundary_ratio(spectrum)
    if ratio > BOUNDARY_DECAY:
        message = 'input spectrum reaches ' + format(ratio, '.2e') + ' of its peak near the frequency boundary'
        logger.warning('aliasing: ' + message)
        result = result.with_warning(message)
    return result


def adjoint_phase(phase):
    """
    Φ̃(x, η) = -Φ(-η, x)
    """
    return Adjoint(phase)


def adjoint_transform(sigma):
    """
    σ̃(x, η) = conj(σ(-η, x)) on a square grid
    """
    if sigma.position_grid != sigma.frequency_grid:
        raise ShapeError('adjoint symbol needs identical position and frequency grids, got '
                         + str(sigma.position_grid.describe()) + ' and ' + str(sigma.frequency_grid.describe()))
    n = sigma.position_grid.n
    reflected = (n - np.arange(n)) % n
    samples = np.conj(sigma.samples[reflected, :].T)
    descriptor = None
    if sigma.descriptor is not None:
        parent = sigma.descriptor
        descriptor = lambda x, eta: np.conj(parent(-np.asarray(eta), x))
    return SymbolGrid(sigma.position_grid, sigma.frequency_grid, samples, descriptor)


def duality_defect(phase, sigma, u, v):
    """
    |⟨F T F^{-1} u, v⟩ - ⟨u, T̃ v⟩| / (‖u‖ ‖v‖), T̃ carrying (Φ̃, σ̃) as the adjoint of F T F^{-1}
    """
    check_same_grid(u.grid, v.grid)
    forward = fourier(apply_fio(phase, sigma, inverse_fourier(u)))
    backward = apply_fio(adjoint_phase(phase), adjoint_transform(sigma), v)
    scale = np.sqrt(inner(u, u).real * inner(v, v).real)
    if scale == 0:
        return 0.0
    return float(abs(inner(forward, v) - inner(u, backward)) / scale)


def operator_norm_bound(sigma, f, output):
    """
    ‖Tf‖_{L²} / (‖σ‖_{L²} ‖f‖_{L²}); at most one up to quadrature slack
    """
    denominator = sigma.l2_norm() * np.sqrt(inner(f, f).real)
    if denominator == 0:
        return 0.0
    return float(np.sqrt(inner(output, output).real) / denominator)
