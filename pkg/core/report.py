import json
import os
import logging
from termcolor import colored
from core.common import ensure_dir

logger = logging.getLogger(__name__)


class Report:
    """
    Console summaries and CSV / JSON / gnuplot exports of experiment results
    """

    verbosity = None

    def __init__(self, out_dir, verbosity=False):
        self.out_dir = out_dir
        self.verbosity = verbosity

    def set_verbosity(self, verbosity):
        self.verbosity = verbosity

    def path(self, file_name):
        ensure_dir(self.out_dir)
        return os.path.join(self.out_dir, file_name)

    def write_experiment(self, result):
        """
        <name>.csv sweep table, <name>.json summary and <name>.dat gnuplot blocks
        """
        result.table().to_csv(self.path(result.name + '.csv'), index=False)
        self.write_json(result.name + '.json', result.summary())
        self.write_dat(result.name + '.dat', result)
        logger.info(result.name + ': outputs written to ' + str(self.out_dir))
        self.print_result(result)

    def write_json(self, file_name, payload):
        path = self.path(file_name)
        with open(path, 'w') as f:
            json.dump(payload, f, indent=2, default=str)
        return path

    def write_dat(self, file_name, result):
        with open(self.path(file_name), 'w') as f:
            f.write('# ' + result.name + ': lambda value fit\n')
            for series, fit in result.fits.items():
                f.write('# series ' + series + ' slope ' + format(fit.slope, '.6f') + '\n')
                for lam, value, fitted in zip(fit.lambdas, fit.values, fit.predict(fit.lambdas)):
                    f.write(format(lam, '.10g') + ' ' + format(value, '.10g') + ' ' + format(fitted, '.10g') + '\n')
                f.write('\n\n')

    def print_result(self, result):
        print('')
        print('****************************************************')
        print('*  Experiment: ' + result.name.ljust(36) + '*')
        print('****************************************************')
        for check in result.checks:
            print(self.get_status_text(check.label, check.predicted, check.measured, check.tolerance, check.passed))
        if self.verbosity:
            for series, fit in result.fits.items():
                print('  fit ' + series + ': slope ' + format(fit.slope, '.4f') + ', r² ' + format(fit.rsquared, '.6f'))

    def write_verify(self, results):
        """
        verify.json: one record per check across every criterion
        """
        records = [check.as_record() for result in results for check in result.checks]
        path = self.write_json('verify.json', records)
        passed = sum(1 for result in results if result.passed)
        print('')
        print('****************************************************')
        print('*           Verification report:                   *')
        print('****************************************************')
        for result in results:
            color = 'green' if result.passed else 'red'
            print(colored(result.name.ljust(28) + ('pass' if result.passed else 'FAIL'), color))
        print('Experiments passed: ' + str(passed) + ' / ' + str(len(results)))
        logger.info('verification report written to ' + path)
        return records

    @staticmethod
    def get_status_text(label, predicted, measured, tolerance, passed):
        """
        Returns colored check line
        """
        text = '  ' + label + ': predicted ' + format(predicted, '.4f') + ', measured ' + format(measured, '.4g') \
               + ' (tolerance ' + format(tolerance, 'g') + ')'
        return colored(text, 'green' if passed else 'red')
