import unittest
import numpy as np
from core.exceptions import DomainError
from core.grid import Signal, make_grid, fourier, inverse_fourier
from core.oracles import (ChirpedGaussian, chirped_gaussian_norm_asymptotic, dilated_gaussian_norm_asymptotic,
                          dilated_gaussian_limit_exponents, schrodinger_on_gaussian, gaussian_fourier,
                          dilated_gaussian, chirp_multiplied_gaussian, operator_output_kn, bump, bump_fourier,
                          limit_slope, chirped_gaussian_norm, chirped_bump_exponents)
from core.recip import Recip

ONE, HALF, INF = Recip(1), Recip(1, 2), Recip(0)


class TestChirpedGaussian(unittest.TestCase):

    def test_domain(self):
        with self.assertRaises(DomainError):
            ChirpedGaussian(1.0, 0.0, 1.0)

    def test_families(self):
        x = np.linspace(-2.0, 2.0, 9)
        np.testing.assert_allclose(dilated_gaussian(2.0).evaluate(x), np.exp(-4.0 * np.pi * x ** 2))
        np.testing.assert_allclose(chirp_multiplied_gaussian(0.5).evaluate(x),
                                   np.exp(1j * np.pi * x ** 2) * np.exp(-0.25 * np.pi * x ** 2))
        self.assertAlmostEqual(operator_output_kn(1.0).amplitude, 2.0 ** -0.5)

    def test_fourier_transform(self):
        grid = make_grid(256, 16.0)
        G = ChirpedGaussian(1.0, 1.0, 0.5)
        expected = gaussian_fourier(G)
        spectrum = fourier(G.sample(grid))
        np.testing.assert_allclose(spectrum.samples, expected.evaluate(spectrum.grid.points), atol=1e-12)

    def test_schrodinger_propagator(self):
        grid = make_grid(256, 16.0)
        for lam in (0.5, 1.0, 2.0):
            spectrum = fourier(dilated_gaussian(lam).sample(grid))
            propagated = spectrum.with_samples(np.exp(1j * np.pi * spectrum.grid.points ** 2) * spectrum.samples)
            expected = schrodinger_on_gaussian(lam).sample(grid)
            np.testing.assert_allclose(inverse_fourier(propagated).samples, expected.samples, atol=1e-10)


class TestNormFormulas(unittest.TestCase):

    def test_b_independence_at_two(self):
        reference = chirped_gaussian_norm_asymptotic(2.0, 0.0, 1, HALF, HALF)
        for b in (1.0, 4.0):
            self.assertEqual(chirped_gaussian_norm_asymptotic(2.0, b, 1, HALF, HALF), reference)

    def test_unit_gaussian(self):
        self.assertAlmostEqual(chirped_gaussian_norm_asymptotic(1.0, 0.0, 1, HALF, HALF), 1.0)
        self.assertAlmostEqual(dilated_gaussian_norm_asymptotic(1.0, 1, HALF, HALF), 1.0)

    def test_limit_exponents(self):
        self.assertEqual(dilated_gaussian_limit_exponents(HALF, HALF, 1), (-0.5, -0.5))
        self.assertEqual(dilated_gaussian_limit_exponents(ONE, ONE, 1), (-1.0, 0.0))
        self.assertEqual(dilated_gaussian_limit_exponents(INF, ONE, 1), (0.0, 0.0))
        self.assertEqual(dilated_gaussian_limit_exponents(HALF, ONE, 2), (-1.0, 0.0))

    def test_limit_slope_agrees_with_exponents(self):
        for r1, r2 in ((ONE, ONE), (HALF, HALF), (HALF, ONE), (ONE, INF)):
            small, large = dilated_gaussian_limit_exponents(r1, r2, 1)
            norm = lambda lam: dilated_gaussian_norm_asymptotic(lam, 1, r1, r2)
            self.assertAlmostEqual(limit_slope(norm, 'small'), small, places=4)
            self.assertAlmostEqual(limit_slope(norm, 'large'), large, places=4)

    def test_chirped_norm_scales_with_amplitude(self):
        G = ChirpedGaussian(3.0, 1.0, 1.0)
        self.assertAlmostEqual(chirped_gaussian_norm(G, ONE, HALF),
                               3.0 * chirped_gaussian_norm_asymptotic(1.0, 1.0, 1, ONE, HALF))

    def test_chirped_bump_exponents(self):
        self.assertEqual(chirped_bump_exponents(HALF, INF), (0.0, -0.5))
        self.assertEqual(chirped_bump_exponents(ONE, HALF, 3), (1.5, 0.0))


class TestBump(unittest.TestCase):

    def test_support(self):
        self.assertEqual(bump(1.0), 0.0)
        self.assertEqual(bump(-3.0), 0.0)
        self.assertAlmostEqual(bump(0.0), np.exp(-1.0))

    def test_fourier_quadrature(self):
        grid = make_grid(1024, 8.0)
        spectrum = fourier(Signal(grid, bump(grid.points)))
        near = np.abs(spectrum.grid.points) <= 4.0
        np.testing.assert_allclose(bump_fourier(spectrum.grid.points[near]), spectrum.samples[near].real, atol=1e-8)


if __name__ == '__main__':
    unittest.main()
