import numpy as np
from dataclasses import dataclass
from fractions import Fraction
from core.exceptions import DomainError
from core.grid import Signal


@dataclass(frozen=True)
class ChirpedGaussian:
    """
    amplitude * e^{-π(a+ib)|x|²} on R^d
    """
    amplitude: complex
    a: float
    b: float
    d: int = 1

    def __post_init__(self):
        if not self.a > 0:
            raise DomainError('chirped Gaussian needs a > 0, got ' + str(self.a))
        if not np.isfinite(self.amplitude):
            raise DomainError('chirped Gaussian amplitude must be finite')

    @property
    def z(self):
        return complex(self.a, self.b)

    def evaluate(self, x):
        return self.amplitude * np.exp(-np.pi * self.z * np.asarray(x) ** 2)

    def sample(self, grid):
        return Signal(grid, self.evaluate(grid.points))


def _positive(name, value):
    if not value > 0:
        raise DomainError(name + ' must be positive, got ' + str(value))


def chirped_gaussian_norm_asymptotic(a, b, d, p, q):
    """
    ((a+1)²+b²)^{(d/2)(1/p-1/2)} / (a^{d/(2q)} (a(a+1)+b²)^{(d/2)(1/p-1/q)})
    """
    _positive('a', a)
    rp, rq = float(p), float(q)
    numerator = ((a + 1.0) ** 2 + b ** 2) ** (d / 2.0 * (rp - 0.5))
    denominator = a ** (d * rq / 2.0) * (a * (a + 1.0) + b ** 2) ** (d / 2.0 * (rp - rq))
    return numerator / denominator


def dilated_gaussian_norm_asymptotic(lam, d, p, q):
    """
    λ^{-d/p} (1+λ)^{d(1/p+1/q-1)}
    """
    _positive('lambda', lam)
    rp, rq = float(p), float(q)
    return lam ** (-d * rp) * (1.0 + lam) ** (d * (rp + rq - 1.0))


def dilated_gaussian_limit_exponents(r1, r2, d):
    """
    Log-log slopes of ‖φ_λ‖_{M^{r1,r2}} as λ→0 and λ→∞: (-d/r1, -d/r2')
    """
    small = -d * Fraction(r1)
    large = -d * (1 - Fraction(r2))
    return float(small), float(large)


def schrodinger_on_gaussian(lam, d=1):
    """
    Free Schrödinger propagator applied to e^{-πλ²|x|²}
    """
    _positive('lambda', lam)
    amplitude = (1.0 - 1j * lam ** 2) ** (-d / 2.0)
    denominator = 1.0 + lam ** 4
    return ChirpedGaussian(amplitude, lam ** 2 / denominator, lam ** 4 / denominator, d)


def gaussian_fourier(G):
    """
    F(A e^{-πz|x|²}) = A z^{-d/2} e^{-π|ξ|²/z}, principal branch
    """
    z = G.z
    amplitude = G.amplitude * z ** (-G.d / 2.0)
    modulus = abs(z) ** 2
    return ChirpedGaussian(amplitude, G.a / modulus, -G.b / modulus, G.d)


def chirped_gaussian_stft_norm(G, p, q, scale=1.0):
    """
    Exact ‖V_g G‖_{L^{p,q}} for the L2-normalized Gaussian window of the given scale
    """
    _positive('scale', scale)
    a, b, gamma = G.a, G.b, scale
    rp, rq = float(p), float(q)
    w2 = (a + gamma) ** 2 + b ** 2
    spread = a * (a + gamma) + b ** 2
    alpha = gamma * spread / w2
    beta = a / spread
    factor = (2.0 * gamma) ** 0.25 * w2 ** (-0.25)
    if rp > 0:
        factor *= (alpha / rp) ** (-rp / 2.0)
    if rq > 0:
        factor *= (beta / rq) ** (-rq / 2.0)
    return abs(G.amplitude) * factor ** G.d


def dilated_gaussian(lam, d=1):
    """
    φ_λ(x) = e^{-πλ²|x|²}
    """
    _positive('lambda', lam)
    return ChirpedGaussian(1.0, lam ** 2, 0.0, d)


def chirp_multiplied_gaussian(lam, d=1):
    """
    e^{iπ|x|²} φ_λ(x)
    """
    _positive('lambda', lam)
    return ChirpedGaussian(1.0, lam ** 2, -1.0, d)


def operator_output_kn(lam, d=1):
    """
    T_λ φ_λ for the Kohn-Nirenberg phase and σ_λ = φ_{λ/√2} ⊗ φ_{1/λ}
    """
    _positive('lambda', lam)
    return ChirpedGaussian(2.0 ** (-d / 2.0), lam ** 2, 0.0, d)


def operator_output_chirp(lam, d=1):
    """
    T_λ φ_λ for the phase |x|²/2 + x·η and the same symbols
    """
    _positive('lambda', lam)
    return ChirpedGaussian(2.0 ** (-d / 2.0), lam ** 2, -1.0, d)


def bump(x):
    """
    Reference C_c^∞ bump exp(-1/(1-x²)) on (-1, 1)
    """
    x = np.asarray(x, dtype=float)
    inside = np.abs(x) < 1.0
    safe = np.where(inside, 1.0 - x ** 2, 1.0)
    return np.where(inside, np.exp(-1.0 / safe), 0.0)


def limit_slope(norm_of_lambda, end, decades=(5.0, 6.0)):
    """
    Log-log slope of a closed-form norm far into one end of the λ axis
    """
    sign = -1.0 if end == 'small' else 1.0
    lo, hi = (10.0 ** (sign * decades[0]), 10.0 ** (sign * decades[1]))
    return float((np.log(norm_of_lambda(hi)) - np.log(norm_of_lambda(lo))) / (np.log(hi) - np.log(lo)))


def chirped_gaussian_norm(G, p, q):
    """
    Closed-form size of ‖G‖_{M^{p,q}} up to window constants, amplitude included
    """
    return abs(G.amplitude) * chirped_gaussian_norm_asymptotic(G.a, G.b, G.d, p, q)


def chirped_bump_exponents(q, t1, d=1):
    """
    λ→∞ exponents of ‖F h_λ‖_{L^q} and of the dispersed bump in L^{t1}: d(1/q - 1/2), d(1/t1 - 1/2)
    """
    half = Fraction(1, 2)
    return float(d * (Fraction(q) - half)), float(d * (Fraction(t1) - half))


def bump_fourier(xi, points=128):
    """
    F h(ξ) of the reference bump by Gauss-Legendre quadrature on (-1, 1)
    """
    nodes, weights = np.polynomial.legendre.leggauss(points)
    xi = np.asarray(xi, dtype=float)
    return np.cos(2.0 * np.pi * np.multiply.outer(xi, nodes)) @ (weights * bump(nodes))
