import unittest
from core.config import arg_parser, ExperimentConfig
from core.constants import DEFAULT_N, SMALL_LAMBDA_RANGE, LARGE_LAMBDA_RANGE
from core.exceptions import ConfigError
from core.recip import Recip


class TestExperimentConfig(unittest.TestCase):

    def test_defaults(self):
        cfg = ExperimentConfig()
        self.assertEqual(cfg.n, DEFAULT_N)
        self.assertEqual(cfg.small_range, SMALL_LAMBDA_RANGE)
        self.assertEqual(cfg.large_range, LARGE_LAMBDA_RANGE)
        self.assertEqual(cfg.recip('p'), Recip(0))
        self.assertEqual(cfg.exponents['r1'], Recip(1, 2))

    def test_grid_size(self):
        with self.assertRaises(ConfigError):
            ExperimentConfig(n=100)
        with self.assertRaises(ConfigError):
            ExperimentConfig(n=1)
        with self.assertRaises(ConfigError):
            ExperimentConfig(extent=0.0)

    def test_exponents(self):
        self.assertEqual(ExperimentConfig(q='4/3').recip('q'), Recip(3, 4))
        with self.assertRaises(ConfigError):
            ExperimentConfig(p='1/2')
        with self.assertRaises(ConfigError):
            ExperimentConfig(t1='two')

    def test_ranges(self):
        with self.assertRaises(ConfigError):
            ExperimentConfig(small_range=(0.01, 0.5))
        with self.assertRaises(ConfigError):
            ExperimentConfig(large_range=(4.0, 2.0))
        cfg = ExperimentConfig(large_range=(2.0, 16.0), allow_aliasing=True)
        self.assertEqual(cfg.large_range, (2.0, 16.0))

    def test_schema(self):
        with self.assertRaises(ConfigError):
            ExperimentConfig(symbol='wavelet')
        with self.assertRaises(ConfigError):
            ExperimentConfig(k=0)
        with self.assertRaises(ConfigError):
            ExperimentConfig(coefficients=(1.0, 2.0))

    def test_with_values(self):
        cfg = ExperimentConfig().with_values(r1='1', d=2)
        self.assertEqual(cfg.recip('r1'), Recip(1))
        self.assertEqual(cfg.d, 2)
        self.assertEqual(ExperimentConfig().r1, '2')

    def test_from_args(self):
        args = arg_parser.parse_args(['experiment', 'gaussian-dilation', '--n', '256', '--extent', '16',
                                      '--large_range', '2, 4', '--r2', 'inf', '--coefficients', '1,2,3'])
        cfg = ExperimentConfig.from_args(args)
        self.assertEqual(args.command, ['experiment', 'gaussian-dilation'])
        self.assertEqual(cfg.n, 256)
        self.assertEqual(cfg.extent, 16.0)
        self.assertEqual(cfg.large_range, (2.0, 4.0))
        self.assertEqual(cfg.recip('r2'), Recip(0))
        self.assertEqual(cfg.coefficients, (1.0, 2.0, 3.0))

    def test_gabor_coordinates(self):
        args = arg_parser.parse_args(['gabor-check', '--x', '0.5', '--omega', '0.25', '--x2', '-1', '--omega2', '2'])
        cfg = ExperimentConfig.from_args(args)
        self.assertEqual((cfg.x, cfg.omega, cfg.x2, cfg.omega2), (0.5, 0.25, -1.0, 2.0))
        self.assertEqual(ExperimentConfig().with_values(omega2=1.5).omega2, 1.5)
        self.assertEqual(ExperimentConfig().record()['x'], 0.0)

    def test_record(self):
        record = ExperimentConfig().record()
        self.assertEqual(record['small_range'], list(SMALL_LAMBDA_RANGE))
        self.assertIsNone(record['coefficients'])


if __name__ == '__main__':
    unittest.main()
