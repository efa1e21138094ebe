import os
import sys
import json
import logging
import logging.config
from termcolor import colored
from core.common import load_phase, ensure_dir
from core.config import arg_parser, ExperimentConfig
from core.engine import Engine
from core.plot import Plot
from core.exceptions import TamefioError, UsageError, CheckFailed
from core.grid import make_grid, signal_from_csv, signal_to_csv
from core.norms import modulation_norm, WeightSpec
from core.tfa import stft, stft_to_csv, gaussian_window
from experiments.base import input_signal
from fio.gabor import gabor_matrix_direct, gabor_matrix_via_stft
from fio.operator import apply_fio
from fio.symbols import SymbolGrid, symbol_descriptor
from fio.tameness import check_tame
from lib.exponents.checkers import kernel_for
from lib.exponents.indices import IndexTuple
from lib.exponents.region import region_scan, parse_fixed

logger = logging.getLogger('tamefio')

GABOR_CHECK_RTOL = 1e-6


def setup_logging(verbosity):
    if os.path.exists('logging.ini'):
        logging.config.fileConfig('logging.ini', disable_existing_loggers=False)
    else:
        logging.basicConfig(format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    logging.getLogger().setLevel(logging.DEBUG if verbosity else logging.INFO)


def load_input(cfg):
    """
    --input CSV when given, otherwise the configured input family on the configured grid
    """
    if cfg.input:
        return signal_from_csv(cfg.input)
    return input_signal(cfg.input_family, make_grid(cfg.n, cfg.extent), cfg.lam)


def output_path(cfg, file_name):
    ensure_dir(cfg.out)
    return os.path.join(cfg.out, file_name)


def operator_parts(cfg, grid):
    phase = load_phase(cfg.phase, cfg.coefficients)
    report = check_tame(phase)
    logger.info('phase ' + str(phase.describe()) + ' tame: ' + str(report.tame))
    sigma = SymbolGrid.from_descriptor(symbol_descriptor(cfg.symbol, cfg.lam), grid)
    return phase, sigma


def run_stft(cfg):
    f = load_input(cfg)
    V = stft(f, gaussian_window(f.grid, cfg.window_scale))
    stft_to_csv(V, output_path(cfg, 'stft.csv'), magnitude_only=True)
    return 0


def run_norm(cfg):
    f = load_input(cfg)
    result = modulation_norm(f, cfg.recip('p'), cfg.recip('q'), WeightSpec(cfg.s1, cfg.s2),
                             gaussian_window(f.grid, cfg.window_scale))
    print('M^{' + cfg.p + ',' + cfg.q + '} norm: ' + format(result.value, '.10g'))
    with open(output_path(cfg, 'norm.json'), 'w') as out:
        json.dump(result.as_record(), out, indent=2)
    return 0


def run_fio_apply(cfg):
    f = load_input(cfg)
    phase, sigma = operator_parts(cfg, f.grid)
    image = apply_fio(phase, sigma, f)
    for warning in image.warnings:
        print(colored('warning: ' + warning, 'yellow'))
    signal_to_csv(image, output_path(cfg, 'fio.csv'))
    return 0


def run_gabor_check(cfg):
    grid = make_grid(cfg.n, cfg.extent)
    phase, sigma = operator_parts(cfg, grid)
    g = gaussian_window(grid, cfg.window_scale)
    direct = abs(gabor_matrix_direct(phase, sigma, g, cfg.x, cfg.omega, cfg.x2, cfg.omega2))
    via = gabor_matrix_via_stft(phase, sigma, g, cfg.x, cfg.omega, cfg.x2, cfg.omega2)
    deviation = abs(direct - via) / direct if direct > 0 else abs(via)
    passed = deviation <= GABOR_CHECK_RTOL
    print('direct: ' + format(direct, '.12g') + ', via symbol stft: ' + format(via, '.12g'))
    print(colored('relative deviation: ' + format(deviation, '.3e'), 'green' if passed else 'red'))
    if not passed:
        raise CheckFailed('gabor matrix identity off by ' + format(deviation, '.3e'))
    return 0


def run_exponents(cfg, action):
    if action == 'check':
        t = IndexTuple(cfg.recip('p'), cfg.recip('q'), cfg.recip('r1'), cfg.recip('r2'),
                       cfg.recip('t1'), cfg.recip('t2'), cfg.s1, cfg.s2, cfg.d)
        admissible = bool(kernel_for(cfg.checker)(t.coordinates(), 1, t.s1, t.s2, t.d))
        print(cfg.checker + ' ' + str(t.describe()))
        print(colored('admissible: ' + str(admissible).lower(), 'green' if admissible else 'red'))
        return 0
    if action == 'region':
        region = region_scan(cfg.checker, parse_fixed(cfg.fixed), cfg.k, cfg.s1, cfg.s2, cfg.d)
        base = cfg.checker + '-region'
        region.to_csv(output_path(cfg, base + '.csv'))
        region.to_json(output_path(cfg, base + '.json'))
        region.to_dat(output_path(cfg, base + '.dat'))
        if cfg.plot:
            Plot(cfg.out).draw_region(region, base + '.html')
        print(json.dumps(region.summary(), indent=2))
        return 0
    raise UsageError('exponents expects check or region, got ' + str(action))


def dispatch(command, cfg):
    head, rest = command[0], command[1:]
    if head == 'stft':
        return run_stft(cfg)
    if head == 'norm':
        return run_norm(cfg)
    if head == 'fio' and rest == ['apply']:
        return run_fio_apply(cfg)
    if head == 'gabor-check':
        return run_gabor_check(cfg)
    if head == 'exponents' and len(rest) == 1:
        return run_exponents(cfg, rest[0])
    if head == 'experiment' and len(rest) == 1:
        result = Engine(cfg).run_experiment(rest[0])
        return 0 if result.passed else CheckFailed.exit_code
    if head == 'verify':
        return Engine(cfg).verify()
    raise UsageError('unknown command: ' + ' '.join(command))


def cli_main(argv=None):
    """
    Returns 0 on success, 1 when a check fails and 2 on usage or input errors
    """
    try:
        args = arg_parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    setup_logging(args.verbosity)
    try:
        cfg = ExperimentConfig.from_args(args)
        return dispatch(args.command, cfg)
    except TamefioError as e:
        print(colored(str(e), 'red'), file=sys.stderr)
        if isinstance(e, UsageError):
            arg_parser.print_usage(sys.stderr)
        return e.exit_code


if __name__ == '__main__':
    sys.exit(cli_main())
