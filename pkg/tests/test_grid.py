import os
import tempfile
import unittest
import numpy as np
from core.exceptions import ParameterError, ShapeError, DataError
from core.grid import (Grid1D, Signal, make_grid, check_same_grid, fourier, inverse_fourier, inner,
                       lebesgue_norm, signal_to_csv, signal_from_csv, save_signal, load_signal)
from core.recip import Recip


def gaussian(grid, shift=0.0):
    return Signal(grid, np.exp(-np.pi * (grid.points - shift) ** 2))


class TestGrid(unittest.TestCase):

    def test_centered_points(self):
        grid = make_grid(8, 4.0)
        self.assertEqual(grid.dx, 0.5)
        np.testing.assert_allclose(grid.points, [-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5])

    def test_rejects_bad_sizes(self):
        with self.assertRaises(ParameterError):
            make_grid(6, 1.0)
        with self.assertRaises(ParameterError):
            make_grid(8, 0.0)

    def test_dual_grid(self):
        grid = make_grid(256, 16.0)
        dual = grid.dual()
        self.assertEqual(dual.n, 256)
        self.assertAlmostEqual(dual.dx, 1.0 / 16.0)
        self.assertEqual(dual.dual(), grid)

    def test_equality_tolerance(self):
        self.assertEqual(Grid1D(64, 0.25), Grid1D(64, 0.25 * (1 + 1e-14)))
        self.assertNotEqual(Grid1D(64, 0.25), Grid1D(64, 0.26))
        with self.assertRaises(ShapeError):
            check_same_grid(Grid1D(64, 0.25), Grid1D(128, 0.25))

    def test_index_of(self):
        grid = make_grid(16, 8.0)
        self.assertEqual(grid.index_of(0.0), 8)
        self.assertEqual(grid.index_of(-4.0), 0)
        self.assertIsNone(grid.index_of(0.25))


class TestSignal(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(256, 16.0)

    def test_validation(self):
        with self.assertRaises(ShapeError):
            Signal(self.grid, np.zeros(10))
        samples = np.zeros(self.grid.n)
        samples[3] = np.nan
        with self.assertRaises(DataError):
            Signal(self.grid, samples)

    def test_samples_are_read_only(self):
        f = gaussian(self.grid)
        with self.assertRaises(ValueError):
            f.samples[0] = 1.0

    def test_translate_on_lattice(self):
        f = gaussian(self.grid)
        np.testing.assert_allclose(f.translate(1.0).samples, gaussian(self.grid, 1.0).samples, atol=1e-14)

    def test_translate_off_lattice(self):
        f = gaussian(self.grid)
        np.testing.assert_allclose(f.translate(0.3).samples, gaussian(self.grid, 0.3).samples, atol=1e-10)

    def test_modulate(self):
        f = gaussian(self.grid).modulate(2.0)
        expected = np.exp(2j * np.pi * 2.0 * self.grid.points) * gaussian(self.grid).samples
        np.testing.assert_allclose(f.samples, expected)


class TestFourier(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(256, 16.0)

    def test_gaussian_is_self_dual(self):
        spectrum = fourier(gaussian(self.grid))
        self.assertEqual(spectrum.grid, self.grid.dual())
        np.testing.assert_allclose(spectrum.samples, np.exp(-np.pi * spectrum.grid.points ** 2), atol=1e-12)

    def test_shift_becomes_modulation(self):
        spectrum = fourier(gaussian(self.grid, 1.0))
        xi = spectrum.grid.points
        np.testing.assert_allclose(spectrum.samples, np.exp(-2j * np.pi * xi) * np.exp(-np.pi * xi ** 2), atol=1e-12)

    def test_inverse(self):
        f = gaussian(self.grid, 0.5).modulate(1.5)
        np.testing.assert_allclose(inverse_fourier(fourier(f)).samples, f.samples, atol=1e-13)

    def test_plancherel(self):
        f = gaussian(self.grid, 0.5).modulate(1.5)
        half = Recip(1, 2)
        self.assertAlmostEqual(lebesgue_norm(f, half), lebesgue_norm(fourier(f), half), places=12)


class TestNormsAndInner(unittest.TestCase):

    def setUp(self):
        self.grid = make_grid(256, 16.0)

    def test_lebesgue_norms_of_gaussian(self):
        f = gaussian(self.grid)
        self.assertAlmostEqual(lebesgue_norm(f, Recip(1)), 1.0, places=12)
        self.assertAlmostEqual(lebesgue_norm(f, Recip(0)), 1.0, places=12)
        self.assertAlmostEqual(lebesgue_norm(f, Recip(1, 2)), 2.0 ** -0.25, places=12)

    def test_inner_is_conjugate_linear(self):
        f = gaussian(self.grid)
        g = gaussian(self.grid, 0.5)
        self.assertAlmostEqual(inner(f, g.scale(1j)), -1j * inner(f, g), places=14)
        self.assertAlmostEqual(inner(f, g), np.conj(inner(g, f)), places=14)


class TestSignalIO(unittest.TestCase):

    def test_csv(self):
        f = gaussian(make_grid(64, 8.0)).modulate(0.5)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'f.csv')
            signal_to_csv(f, path)
            loaded = signal_from_csv(path)
        self.assertEqual(loaded.grid, f.grid)
        np.testing.assert_allclose(loaded.samples, f.samples, atol=1e-12)

    def test_npz_version(self):
        f = gaussian(make_grid(64, 8.0))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'f.npz')
            save_signal(path, f)
            np.testing.assert_array_equal(load_signal(path).samples, f.samples)
            np.savez(path, format_version=99, n=64, dx=0.125, re=f.samples.real, im=f.samples.imag)
            with self.assertRaises(DataError):
                load_signal(path)


if __name__ == '__main__':
    unittest.main()
