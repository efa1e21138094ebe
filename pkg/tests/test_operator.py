import unittest
import numpy as np
from core.exceptions import ShapeError
from core.grid import Signal, make_grid
from fio.operator import apply_fio, adjoint_phase, adjoint_transform, duality_defect, operator_norm_bound
from fio.symbols import ConstantSymbol, GaussianSymbol, SymbolGrid, gaussian_pair
from phases.kohnnirenberg import KohnNirenberg
from phases.quadraticchirp import QuadraticChirp


def gaussian(grid, center=0.0, nu=0.0):
    return Signal.from_function(grid, lambda x: np.exp(-np.pi * (x - center) ** 2 + 2j * np.pi * nu * x))


class TestApplyFio(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(256, 16.0)
        self.identity = SymbolGrid.from_descriptor(ConstantSymbol(), self.grid)
        self.f = gaussian(self.grid, 0.5)

    def test_kohn_nirenberg_with_unit_symbol(self):
        output = apply_fio(KohnNirenberg(), self.identity, self.f)
        np.testing.assert_allclose(output.samples, self.f.samples, atol=1e-10)
        self.assertEqual(output.warnings, ())

    def test_chirp_multiplier(self):
        output = apply_fio(QuadraticChirp(), self.identity, self.f)
        expected = np.exp(1j * np.pi * self.grid.points ** 2) * self.f.samples
        np.testing.assert_allclose(output.samples, expected, atol=1e-10)

    def test_aliasing_warning(self):
        samples = np.zeros(self.grid.n)
        samples[self.grid.n // 2] = 1.0
        with self.assertLogs('fio.operator', level='WARNING'):
            output = apply_fio(KohnNirenberg(), self.identity, Signal(self.grid, samples))
        self.assertEqual(len(output.warnings), 1)

    def test_grid_mismatch(self):
        with self.assertRaises(ShapeError):
            apply_fio(KohnNirenberg(), self.identity, gaussian(make_grid(128, 16.0)))


class TestAdjoint(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(256, 16.0)
        self.sigma = SymbolGrid.from_descriptor(gaussian_pair(1.0), self.grid)
        self.u = gaussian(self.grid, 0.5, -0.25)
        self.v = gaussian(self.grid, -1.0, 0.5)

    def test_adjoint_phase(self):
        adjoint = adjoint_phase(QuadraticChirp())
        x, eta = 0.7, -1.3
        self.assertAlmostEqual(float(adjoint.phase(x, eta)), -float(QuadraticChirp().phase(-eta, x)))
        self.assertAlmostEqual(float(adjoint_phase(KohnNirenberg()).phase(2.0, 3.0)), 6.0)

    def test_adjoint_symbol(self):
        adjoint = adjoint_transform(self.sigma)
        self.assertEqual(adjoint.samples.shape, self.sigma.samples.shape)
        x, eta = 0.5, 1.25
        self.assertAlmostEqual(adjoint.evaluate(x, eta), np.conj(self.sigma.evaluate(-eta, x)))
        i, j = self.grid.index_of(x), self.grid.index_of(eta)
        k = self.grid.index_of(-eta)
        self.assertAlmostEqual(adjoint.samples[i, j], np.conj(self.sigma.samples[k, i]))

    def test_duality(self):
        for phase in (KohnNirenberg(), QuadraticChirp()):
            self.assertLessEqual(duality_defect(phase, self.sigma, self.u, self.v), 1e-8)

    def test_non_square_grid(self):
        grid = make_grid(128, 8.0)
        with self.assertRaises(ShapeError):
            adjoint_transform(SymbolGrid.from_descriptor(GaussianSymbol(), grid))


class TestNormBound(unittest.TestCase):

    def test_bound(self):
        grid = make_grid(256, 16.0)
        f = gaussian(grid)
        for lam in (0.5, 1.0, 2.0):
            sigma = SymbolGrid.from_descriptor(gaussian_pair(lam), grid)
            output = apply_fio(KohnNirenberg(), sigma, f)
            ratio = operator_norm_bound(sigma, f, output)
            self.assertGreater(ratio, 0.0)
            self.assertLessEqual(ratio, 1.0 + 1e-9)

    def test_zero_symbol(self):
        grid = make_grid(64, 8.0)
        sigma = SymbolGrid(grid, grid.dual(), np.zeros((64, 64)))
        f = gaussian(grid)
        self.assertEqual(operator_norm_bound(sigma, f, apply_fio(KohnNirenberg(), sigma, f)), 0.0)


if __name__ == '__main__':
    unittest.main()
