import os
import json
import tempfile
import unittest
import numpy as np
from core.config import ExperimentConfig
from core.engine import Engine, CRITERIA
from core.exceptions import PreconditionError, UsageError
from core.grid import make_grid
from core.recip import Recip
from core.report import Report
from experiments.base import CheckRecord, ExperimentResult, input_signal
from experiments.chirpedbump import chirped_bump_experiment, check_chirp_resolution
from experiments.chirpedoracle import ChirpedOracle
from experiments.closedforms import ClosedForms
from experiments.compactsupport import CompactSupport
from experiments.enums import CheckStatus
from experiments.exponentlattice import ExponentLattice
from experiments.gaboridentity import GaborIdentity
from experiments.gaussiandilation import gaussian_dilation_experiment
from experiments.chirpunboundedness import chirp_unboundedness_experiment
from experiments.operatorscaling import OperatorScaling
from experiments.schrodingerscaling import schrodinger_scaling_experiment
from experiments.truncation import Truncation, truncation_profile
from lib.scaling import fit_scaling

HALF = Recip(1, 2)


class TestCheckRecord(unittest.TestCase):

    def test_status(self):
        record = CheckRecord('gaussian-dilation', 'small slope', -0.5, -0.47, 0.05)
        self.assertEqual(record.status, CheckStatus.passed)
        self.assertEqual(record.as_record()['fitted_slope'], -0.47)
        record = CheckRecord('gaussian-dilation', 'small slope', -0.5, -0.4, 0.05)
        self.assertFalse(record.passed)
        record = CheckRecord('closed-forms', 'kn', 0.0, 1e-9, 1e-6, 'relative error')
        self.assertEqual(record.as_record()['measured'], 1e-9)

    def test_input_family(self):
        grid = make_grid(64, 8.0)
        self.assertEqual(input_signal('bump', grid).samples.shape, (64,))
        with self.assertRaises(UsageError):
            input_signal('triangle', grid)


class TestExperiments(unittest.TestCase):

    def test_exponent_lattice(self):
        experiment = ExponentLattice(ExperimentConfig(n=64, extent=8.0, k=16))
        result = experiment.run()
        self.assertTrue(result.passed)
        self.assertEqual(set(experiment.regions), {'toft-pq', 'pseudo-pq', 'toft-qt1', 'pseudo-qt1'})
        self.assertTrue(all(count == 0 for count in result.details['violations'].values()))

    def test_closed_forms(self):
        result = ClosedForms(ExperimentConfig(n=512, extent=32.0)).run()
        self.assertEqual(len(result.checks), 12)
        self.assertTrue(result.passed, result.summary())

    def test_gabor_identity(self):
        result = GaborIdentity(ExperimentConfig(n=256, extent=16.0)).run()
        self.assertEqual(result.details['tuples'], 81)
        self.assertTrue(result.passed, result.summary())

    def test_chirped_oracle(self):
        result = ChirpedOracle(ExperimentConfig(n=1024, extent=32.0)).run()
        self.assertTrue(result.passed, result.summary())
        self.assertLessEqual(result.details['max_exact_rel_error'], 1e-6)

    def test_compact_support(self):
        result = CompactSupport(ExperimentConfig(n=256, extent=16.0)).run()
        self.assertEqual(len(result.checks), 6)
        self.assertTrue(result.passed, result.summary())

    def test_chirped_bump_in_l2(self):
        fourier_fit, dispersed_fit = chirped_bump_experiment(HALF, HALF, ExperimentConfig(n=1024, extent=32.0))
        self.assertAlmostEqual(fourier_fit.slope, 0.0, places=6)
        self.assertAlmostEqual(dispersed_fit.slope, 0.0, places=6)

    def test_chirp_resolution(self):
        grid = make_grid(256, 16.0)
        with self.assertRaises(PreconditionError):
            check_chirp_resolution(grid, 10.0)
        with self.assertLogs('experiments.chirpedbump', level='WARNING'):
            check_chirp_resolution(grid, 10.0, allow_aliasing=True)

    def test_truncation_index(self):
        cfg = ExperimentConfig(n=1024, extent=32.0)
        n = Truncation(cfg).select_n()
        self.assertGreaterEqual(n, 1)
        self.assertLessEqual(n, 16)
        profile = truncation_profile(make_grid(1024, 32.0), n)
        self.assertAlmostEqual(float(profile[512]), 1.0)
        self.assertLess(float(np.max(profile)), 1.0 + 1e-12)


class TestScalingExperiments(unittest.TestCase):
    """
    Slope experiments on the default grid
    """

    def setUp(self):
        self.cfg = ExperimentConfig()

    def test_gaussian_dilation(self):
        small, large = gaussian_dilation_experiment(HALF, HALF, self.cfg)
        self.assertAlmostEqual(small.slope, -0.5, delta=0.05)
        self.assertAlmostEqual(large.slope, -0.5, delta=0.05)

    def test_chirp_unboundedness(self):
        fit = chirp_unboundedness_experiment(HALF, Recip(1), self.cfg)
        self.assertAlmostEqual(fit.slope, -0.5, delta=0.05)

    def test_schrodinger_scaling(self):
        small, large = schrodinger_scaling_experiment(HALF, HALF, self.cfg)
        self.assertAlmostEqual(small.slope, -0.5, delta=0.05)
        self.assertAlmostEqual(large.slope, -0.5, delta=0.05)

    def test_operator_scaling_kohn_nirenberg(self):
        cfg = self.cfg.with_values(points_per_octave=4, workers=2)
        result = OperatorScaling(cfg).run()
        self.assertTrue(result.passed, result.summary())
        self.assertEqual(len(result.checks), 6 + 2 * int(result.details['bounded_claim']))
        self.assertEqual(len(result.fits), 6)

    def test_operator_scaling_quadratic_chirp(self):
        cfg = self.cfg.with_values(phase='quadratic-chirp', p='2', q='2', points_per_octave=4, workers=2)
        result = OperatorScaling(cfg).run()
        self.assertTrue(result.passed, result.summary())
        self.assertIn('symbol large-lambda slope', [check.label for check in result.checks])
        self.assertTrue(result.details['small_inequality'] or not result.details['bounded_claim'])

    def test_operator_scaling_phases(self):
        with self.assertRaises(UsageError):
            OperatorScaling(self.cfg.with_values(phase='schrodinger-free'))
        with self.assertRaises(UsageError):
            OperatorScaling(self.cfg.with_values(symbol='constant'))


class TestEngine(unittest.TestCase):

    def test_experiment_class(self):
        self.assertIs(Engine.experiment_class('exponent-lattice'), ExponentLattice)
        for name in ('base', 'enums', 'no-such-experiment'):
            with self.assertRaises(UsageError):
                Engine.experiment_class(name)

    def test_criteria_are_runnable(self):
        for name, overrides in CRITERIA:
            self.assertTrue(overrides)
            Engine.experiment_class(name)

    def test_run_experiment_writes_reports(self):
        with tempfile.TemporaryDirectory() as tmp:
            cfg = ExperimentConfig(n=64, extent=8.0, k=8, out=tmp)
            result = Engine(cfg).run_experiment('exponent-lattice')
            self.assertTrue(result.passed)
            for extension in ('.csv', '.json', '.dat'):
                self.assertTrue(os.path.exists(os.path.join(tmp, 'exponent-lattice' + extension)))
            with open(os.path.join(tmp, 'exponent-lattice.json')) as f:
                self.assertTrue(json.load(f)['pass'])


class TestReport(unittest.TestCase):

    def test_write_experiment(self):
        lambdas = np.geomspace(2.0, 8.0, 9)
        result = ExperimentResult('synthetic')
        result.fits['series'] = fit_scaling(lambdas, lambdas ** -0.5)
        result.rows = [{'series': 'series', 'lambda': lam, 'value': lam ** -0.5, 'fit': lam ** -0.5}
                       for lam in lambdas]
        result.checks.append(CheckRecord('synthetic', 'slope', -0.5, result.fits['series'].slope, 0.05))
        with tempfile.TemporaryDirectory() as tmp:
            report = Report(tmp)
            report.write_experiment(result)
            records = report.write_verify([result])
            with open(os.path.join(tmp, 'synthetic.dat')) as f:
                lines = [line for line in f if line.strip() and not line.startswith('#')]
            self.assertTrue(os.path.exists(os.path.join(tmp, 'verify.json')))
            self.assertTrue(os.path.exists(os.path.join(tmp, 'synthetic.csv')))
        self.assertEqual(len(lines), 9)
        self.assertEqual(len(records), 1)
        self.assertTrue(records[0]['pass'])


if __name__ == '__main__':
    unittest.main()
