import inspect
import logging
import time
from termcolor import colored
import core.common as common
from core.exceptions import UsageError
from core.plot import Plot
from core.report import Report
from experiments.base import Base

logger = logging.getLogger(__name__)

# (experiment, config overrides) per acceptance criterion, in criterion order
CRITERIA = (
    ('gaussian-dilation', ({'r1': '1', 'r2': '1'}, {'r1': '2', 'r2': '2'}, {'r1': 'inf', 'r2': '1'},
                           {'r1': '1', 'r2': 'inf'}, {'r1': '2', 'r2': '1'})),
    ('chirped-oracle', ({},)),
    ('gabor-identity', ({},)),
    ('closed-forms', ({},)),
    ('exponent-lattice', ({},)),
    ('chirp-unboundedness', ({'r1': '2', 'r2': '1'}, {'r1': '1', 'r2': '2'}, {'r1': '2', 'r2': '2'})),
    ('schrodinger-scaling', ({'t1': '2', 't2': '2'}, {'t1': '1', 't2': 'inf'})),
    ('chirped-bump', ({'q': '1', 't1': '2'}, {'q': '2', 't1': 'inf'}, {'q': 'inf', 't1': '2'})),
    ('compact-support', ({},)),
)

# Acceptance criteria are stated in one dimension
CRITERIA_DEFAULTS = {'d': 1}


class Engine:
    """
    Runs named experiments and the acceptance suite, and writes their reports
    """

    def __init__(self, cfg):
        self.cfg = cfg
        self.report = Report(cfg.out, cfg.verbosity)
        self.plot = Plot(cfg.out) if cfg.plot else None

    @staticmethod
    def experiment_class(name):
        experiment_class = common.load_module('experiments.', name)
        if not inspect.isclass(experiment_class) or not issubclass(experiment_class, Base) \
                or inspect.isabstract(experiment_class):
            raise UsageError('not a runnable experiment: ' + str(name))
        return experiment_class

    def execute(self, name, cfg):
        experiment = self.experiment_class(name)(cfg)
        result = experiment.run()
        if self.plot:
            self.plot.draw_fits(result)
            for label, region in getattr(experiment, 'regions', {}).items():
                self.plot.draw_region(region, label + '.html')
        return result

    def run_experiment(self, name):
        """
        Runs one experiment with the configured parameters; writes <name>.csv/.json/.dat
        """
        print(colored('Starting experiment: ' + name, 'yellow'))
        result = self.execute(name, self.cfg)
        self.report.write_experiment(result)
        return result

    def verify(self):
        """
        Runs every acceptance criterion, writes verify.json and returns the exit code
        """
        started = time.time()
        results = []
        for name, overrides in CRITERIA:
            for changes in overrides:
                values = dict(CRITERIA_DEFAULTS)
                values.update(changes)
                cfg = self.cfg.with_values(**values)
                print(colored('Criterion ' + name + ' ' + str(changes or ''), 'yellow'))
                result = self.execute(name, cfg)
                self.report.print_result(result)
                results.append(result)
        self.report.write_verify(results)
        logger.info('verification took ' + format(time.time() - started, '.1f') + ' s')
        return 0 if all(result.passed for result in results) else 1
