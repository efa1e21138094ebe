import logging
import numpy as np
from dataclasses import dataclass
from numpy.lib.stride_tricks import sliding_window_view
from core.constants import LOCAL_QUADRATURE_N, LOCAL_QUADRATURE_EXTENT
from core.exceptions import DomainError, ParameterError, PreconditionError
from core.grid import Grid1D, make_grid, check_same_grid, centered_dft, fourier
from core.norms import lp_reduce, UNWEIGHTED
from core.tfa import gabor_coefficient, gaussian_window
from fio.operator import apply_fio

logger = logging.getLogger(__name__)


def local_grids():
    grid = make_grid(LOCAL_QUADRATURE_N, LOCAL_QUADRATURE_EXTENT)
    return grid, grid


@dataclass(frozen=True, eq=False)
class PsiWindow:
    """
    Ψ_z(ζ) = e^{2πiΦ_{2,z}(ζ)} conj(g(ζ1)) ĝ(ζ2) sampled on a ζ1 × ζ2 grid
    """
    first_grid: Grid1D
    second_grid: Grid1D
    samples: np.ndarray
    z: tuple


def _window_factors(g, grids):
    first, second = grids
    if g.has_closed_form():
        return np.conj(g.evaluate(first.points)), g.evaluate_hat(second.points)
    check_same_grid(first, g.grid)
    spectrum = fourier(g.signal)
    check_same_grid(second, spectrum.grid)
    return np.conj(g.signal.samples), spectrum.samples


def psi_window(phase, g, z, grids=None):
    if grids is None:
        grids = local_grids() if g.has_closed_form() else (g.grid, g.grid.dual())
    g_bar, g_hat = _window_factors(g, grids)
    zeta1 = grids[0].points[:, None]
    zeta2 = grids[1].points[None, :]
    remainder = phase.taylor_remainder(z, zeta1, zeta2)
    samples = np.exp(2j * np.pi * remainder) * g_bar[:, None] * g_hat[None, :]
    return PsiWindow(grids[0], grids[1], samples, (float(z[0]), float(z[1])))


def _check_coverage(grid, x, omega):
    if not grid.covers(x) or abs(omega) > 1.0 / (2.0 * grid.dx):
        raise DomainError('point (' + str(x) + ', ' + str(omega) + ') outside the grid coverage')


def gabor_matrix_direct(phase, sigma, g, x, omega, x2, omega2):
    """
    ⟨T g_{x,ω}, g_{x',ω'}⟩ through one operator application
    """
    _check_coverage(g.grid, x, omega)
    image = apply_fio(phase, sigma, g.shifted(x, omega))
    return gabor_coefficient(image, g, x2, omega2)


def gabor_matrix_block(phase, sigma, g, sources, targets):
    """
    Gabor matrix for lists of source and target points, one operator application per source
    """
    block = np.zeros((len(sources), len(targets)), dtype=complex)
    for row, (x, omega) in enumerate(sources):
        _check_coverage(g.grid, x, omega)
        image = apply_fio(phase, sigma, g.shifted(x, omega))
        for column, (x2, omega2) in enumerate(targets):
            block[row, column] = gabor_coefficient(image, g, x2, omega2)
    return block


def _shifted_symbol(sigma, z):
    """
    σ(z + ζ) on the symbol's own grids, z lattice aligned
    """
    i = sigma.position_grid.index_of(z[0])
    j = sigma.frequency_grid.index_of(z[1])
    if i is None or j is None:
        raise DomainError('symbol without closed form needs a lattice-aligned z, got ' + str(z))
    shift = (sigma.position_grid.n // 2 - i, sigma.frequency_grid.n // 2 - j)
    return np.roll(sigma.samples, shift, axis=(0, 1))


def gabor_matrix_via_stft(phase, sigma, g, x, omega, x2, omega2):
    """
    |V_{Ψ_z} σ(z, ω' - ∇xΦ(z), x - ∇ηΦ(z))| with z = (x', ω), evaluated at that single
    point by quadrature over ζ. The STFT pairs σ against the window conj(Ψ_z).
    """
    z = (x2, omega)
    v1 = omega2 - float(phase.grad_x(z[0], z[1]))
    v2 = x - float(phase.grad_eta(z[0], z[1]))
    if sigma.descriptor is not None and g.has_closed_form():
        grids = local_grids()
        shifted = sigma.evaluate(z[0] + grids[0].points[:, None], z[1] + grids[1].points[None, :])
    else:
        grids = (sigma.position_grid, sigma.frequency_grid)
        shifted = _shifted_symbol(sigma, z)
    psi = psi_window(phase, g, z, grids).samples
    zeta1 = grids[0].points[:, None]
    zeta2 = grids[1].points[None, :]
    integrand = shifted * psi * np.exp(-2j * np.pi * (v1 * zeta1 + v2 * zeta2))
    return float(abs(np.sum(integrand)) * grids[0].dx * grids[1].dx)


def symbol_stft(sigma, window):
    """
    |V_W σ| over the full 4-D lattice of a (coarse) symbol grid; axes (x, η, ξ1, ξ2)
    """
    n, m = sigma.samples.shape
    extended = np.tile(np.conj(window), (2, 2))
    views = sliding_window_view(extended, (n, m))
    starts_x = (n // 2 - np.arange(n)) % n
    starts_eta = (m // 2 - np.arange(m)) % m
    shifted = views[starts_x][:, starts_eta] * sigma.samples[None, None, :, :]
    values = centered_dft(centered_dft(shifted, axis=2), axis=3)
    return np.abs(values) * sigma.position_grid.dx * sigma.frequency_grid.dx


def _mixed_norm_4d(magnitude, sigma, p, q, w):
    """
    L^p over (x, η), then the weight m(ξ1, ξ2), then L^q over (ξ1, ξ2)
    """
    position_grid, frequency_grid = sigma.position_grid, sigma.frequency_grid
    inner_norm = lp_reduce(lp_reduce(magnitude, p, 0, position_grid.dx, True), p, 0, frequency_grid.dx, True)
    dual_x, dual_eta = position_grid.dual(), frequency_grid.dual()
    if w is not None and not w.is_trivial():
        if not w.tensor:
            raise PreconditionError('symbol norms need a weight extended by 1 in (x, η); pass w.extended()')
        inner_norm = inner_norm * w.evaluate(dual_x.points[:, None], dual_eta.points[None, :])
    return float(lp_reduce(lp_reduce(inner_norm, q, 0, dual_x.dx, True), q, 0, dual_eta.dx, True))


def symbol_norm_supz(sigma, phase, p, q, w=None, z_grid=None, g=None):
    """
    ‖sup_z |V_{Ψ_z} σ|‖_{L^{p,q}_{1⊗m}} with the supremum over the points of z_grid
    """
    if not z_grid:
        raise ParameterError('symbol_norm_supz needs at least one z point')
    g = g if g is not None else gaussian_window(sigma.position_grid)
    grids = (sigma.position_grid, sigma.frequency_grid)
    envelope = None
    for z in z_grid:
        psi = psi_window(phase, g, z, grids).samples
        magnitude = symbol_stft(sigma, np.conj(psi))
        envelope = magnitude if envelope is None else np.maximum(envelope, magnitude)
    return _mixed_norm_4d(envelope, sigma, p, q, w if w is not None else UNWEIGHTED)


def symbol_modulation_norm(sigma, p, q, w=None, g=None):
    """
    ‖σ‖_{M^{p,q}_{1⊗m}} with the tensor Gaussian window g ⊗ g
    """
    first = g if g is not None else gaussian_window(sigma.position_grid)
    second = gaussian_window(sigma.frequency_grid, first.scale if first.has_closed_form() else 1.0)
    window = first.signal.samples[:, None] * second.signal.samples[None, :]
    magnitude = symbol_stft(sigma, window)
    return _mixed_norm_4d(magnitude, sigma, p, q, w if w is not None else UNWEIGHTED)
