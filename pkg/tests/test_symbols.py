import os
import tempfile
import unittest
import numpy as np
from core.exceptions import ShapeError, DataError, PreconditionError, UsageError
from core.grid import make_grid
from fio.symbols import (ConstantSymbol, GaussianSymbol, TensorSymbol, SymbolGrid, gaussian_pair,
                         symbol_descriptor, bump_pair)


class TestDescriptors(unittest.TestCase):

    def test_constant(self):
        values = ConstantSymbol(2.0)(np.zeros((2, 1)), np.zeros((1, 3)))
        self.assertEqual(values.shape, (2, 3))
        self.assertTrue(np.all(values == 2.0))

    def test_gaussian_pair(self):
        lam = 2.0
        sigma = gaussian_pair(lam)
        x, eta = 0.3, -0.7
        expected = np.exp(-np.pi * lam ** 2 * x ** 2 / 2.0) * np.exp(-np.pi * eta ** 2 / lam ** 2)
        self.assertAlmostEqual(sigma(x, eta), expected)

    def test_tensor(self):
        sigma = TensorSymbol(np.cos, np.sin)
        self.assertAlmostEqual(sigma(0.0, 1.0), np.sin(1.0))

    def test_bump_pair_support(self):
        self.assertEqual(bump_pair()(1.5, 0.0), 0.0)

    def test_lookup(self):
        self.assertIsInstance(symbol_descriptor('gaussian'), GaussianSymbol)
        with self.assertRaises(UsageError):
            symbol_descriptor('no-such-symbol')


class TestSymbolGrid(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(64, 8.0)
        self.sigma = SymbolGrid.from_descriptor(GaussianSymbol(), self.grid)

    def test_shape_and_frequency_grid(self):
        self.assertEqual(self.sigma.samples.shape, (64, 64))
        self.assertEqual(self.sigma.frequency_grid, self.grid.dual())
        with self.assertRaises(ValueError):
            self.sigma.samples[0, 0] = 0.0

    def test_validation(self):
        with self.assertRaises(ShapeError):
            SymbolGrid(self.grid, self.grid, np.zeros((64, 32)))
        samples = np.zeros((64, 64))
        samples[1, 1] = np.inf
        with self.assertRaises(DataError):
            SymbolGrid(self.grid, self.grid, samples)

    def test_evaluate(self):
        self.assertAlmostEqual(self.sigma.evaluate(0.5, 0.25), np.exp(-np.pi * (0.25 + 0.0625)))
        bare = SymbolGrid(self.grid, self.grid, np.ones((64, 64)))
        with self.assertRaises(PreconditionError):
            bare.evaluate(0.0, 0.0)

    def test_scale_keeps_descriptor(self):
        scaled = self.sigma.scale(3.0)
        self.assertAlmostEqual(scaled.evaluate(0.0, 0.0), 3.0)
        np.testing.assert_allclose(scaled.samples, 3.0 * self.sigma.samples)

    def test_l2_norm(self):
        self.assertAlmostEqual(self.sigma.l2_norm(), 2.0 ** -0.5, places=10)

    def test_zero(self):
        self.assertTrue(SymbolGrid(self.grid, self.grid, np.zeros((64, 64))).is_zero())
        self.assertFalse(self.sigma.is_zero())

    def test_csv(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'sigma.csv')
            self.sigma.to_csv(path)
            loaded = SymbolGrid.from_csv(path)
        self.assertEqual(loaded.position_grid, self.sigma.position_grid)
        self.assertEqual(loaded.frequency_grid, self.sigma.frequency_grid)
        np.testing.assert_allclose(loaded.samples, self.sigma.samples, atol=1e-12)


if __name__ == '__main__':
    unittest.main()
