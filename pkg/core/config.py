import logging
import configargparse
import jsonschema
from dataclasses import dataclass, asdict
from core.common import parse_floats
from core.constants import (DEFAULT_N, DEFAULT_EXTENT, LAMBDA_MIN, LAMBDA_MAX, SMALL_LAMBDA_RANGE,
                            LARGE_LAMBDA_RANGE, POINTS_PER_OCTAVE, DEFAULT_WINDOW_SCALE,
                            SMALL_REGIME_WINDOW_SCALE, LARGE_REGIME_WINDOW_SCALE)
from core.exceptions import ConfigError, ParameterError
from core.grid import is_power_of_two
from core.recip import parse_exponent

logger = logging.getLogger(__name__)

EXPONENT_FIELDS = ('p', 'q', 'r1', 'r2', 't1', 't2')

arg_parser = configargparse.get_argument_parser(default_config_files=['tamefio.ini'],
                                                description='Time-frequency toolkit for tame Fourier integral operators')
arg_parser.add('-c', '--config', is_config_file=True, help='config file path')
arg_parser.add('command', nargs='+', help='stft | norm | fio apply | gabor-check | exponents check|region | '
                                          'experiment <name> | verify')
arg_parser.add('-v', '--verbosity', help='Verbose output', action='store_true')
arg_parser.add('--n', help='Grid size (power of two)', type=int, default=DEFAULT_N)
arg_parser.add('--extent', help='Grid extent L', type=float, default=DEFAULT_EXTENT)
arg_parser.add('--d', help='Dimension used by the closed forms', type=int, default=1)
arg_parser.add('--small_range', help='Small-lambda fit range "lo,hi"', default='0.125,0.5')
arg_parser.add('--large_range', help='Large-lambda fit range "lo,hi"', default='2,8')
arg_parser.add('--points_per_octave', help='Geometric sweep density', type=int, default=POINTS_PER_OCTAVE)
arg_parser.add('--allow_aliasing', help='Accept lambda sweeps outside [1/8, 8]', action='store_true')
arg_parser.add('--window_scale', help='Gaussian window scale', type=float, default=DEFAULT_WINDOW_SCALE)
arg_parser.add('--small_window_scale', help='Window scale on the small-lambda range', type=float,
               default=SMALL_REGIME_WINDOW_SCALE)
arg_parser.add('--large_window_scale', help='Window scale on the large-lambda range', type=float,
               default=LARGE_REGIME_WINDOW_SCALE)
arg_parser.add('--phase', help='Phase kind (kohn-nirenberg, quadratic-chirp, schrodinger-free, general-quadratic)',
               default='kohn-nirenberg')
arg_parser.add('--coefficients', help='general-quadratic coefficients "c_xx,c_xeta,c_etaeta"')
arg_parser.add('--symbol', help='Symbol family (constant, gaussian, gaussian-pair, bump)', default='gaussian-pair')
arg_parser.add('--input_family', help='Input family (gaussian, chirped-gaussian, bump)', default='gaussian')
arg_parser.add('--lam', help='Dilation parameter of single-signal commands', type=float, default=1.0)
arg_parser.add('--input', help='Input signal CSV (x, re, im)')
for exponent, default in (('p', 'inf'), ('q', '1'), ('r1', '2'), ('r2', '2'), ('t1', '2'), ('t2', '2')):
    arg_parser.add('--' + exponent, help='Exponent ' + exponent + ' in [1, inf]', default=default)
arg_parser.add('--s1', help='Weight exponent s1', type=float, default=0.0)
arg_parser.add('--s2', help='Weight exponent s2', type=float, default=0.0)
arg_parser.add('--k', help='Region lattice resolution', type=int, default=64)
arg_parser.add('--checker', help='Exponent checker id', default='pseudo')
arg_parser.add('--fixed', help='Region coordinates "r1=t1,t1=*,p=1/2" (reciprocals, ties or *)', default='')
arg_parser.add('--x', help='Gabor source position', type=float, default=0.0)
arg_parser.add('--omega', help='Gabor source frequency', type=float, default=0.0)
arg_parser.add('--x2', help='Gabor target position', type=float, default=0.0)
arg_parser.add('--omega2', help='Gabor target frequency', type=float, default=0.0)
arg_parser.add('--out', help='Output directory', default='out')
arg_parser.add('--plot', help='Write interactive HTML plots', action='store_true')
arg_parser.add('--workers', help='Threads used for lambda sweeps', type=int, default=1)

_positive_number = {'type': 'number', 'exclusiveMinimum': 0}
_exponent = {'type': 'string', 'pattern': r'^\s*(inf|infinity|∞|oo|[0-9]+(\.[0-9]+)?(/[0-9]+)?)\s*$'}
_range = {'type': 'array', 'items': _positive_number, 'minItems': 2, 'maxItems': 2}

CONFIG_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'type': 'object',
    'properties': {
        'n': {'type': 'integer', 'minimum': 2},
        'extent': _positive_number,
        'd': {'type': 'integer', 'minimum': 1},
        'small_range': _range,
        'large_range': _range,
        'points_per_octave': {'type': 'integer', 'minimum': 1},
        'allow_aliasing': {'type': 'boolean'},
        'window_scale': _positive_number,
        'small_window_scale': _positive_number,
        'large_window_scale': _positive_number,
        'phase': {'type': 'string', 'minLength': 1},
        'coefficients': {'type': ['array', 'null'], 'items': {'type': 'number'}, 'minItems': 3, 'maxItems': 3},
        'symbol': {'enum': ['constant', 'gaussian', 'gaussian-pair', 'bump']},
        'input_family': {'enum': ['gaussian', 'chirped-gaussian', 'bump']},
        'lam': _positive_number,
        'input': {'type': ['string', 'null']},
        'p': _exponent, 'q': _exponent, 'r1': _exponent, 'r2': _exponent, 't1': _exponent, 't2': _exponent,
        's1': {'type': 'number'},
        's2': {'type': 'number'},
        'k': {'type': 'integer', 'minimum': 1, 'maximum': 1024},
        'checker': {'type': 'string'},
        'fixed': {'type': 'string'},
        'x': {'type': 'number'}, 'omega': {'type': 'number'},
        'x2': {'type': 'number'}, 'omega2': {'type': 'number'},
        'out': {'type': 'string'},
        'plot': {'type': 'boolean'},
        'workers': {'type': 'integer', 'minimum': 1},
        'verbosity': {'type': 'boolean'},
    },
    'additionalProperties': False,
}


@dataclass(frozen=True)
class ExperimentConfig:
    """
    Validated run configuration shared by the engine, the experiments and the CLI
    """
    n: int = DEFAULT_N
    extent: float = DEFAULT_EXTENT
    d: int = 1
    small_range: tuple = SMALL_LAMBDA_RANGE
    large_range: tuple = LARGE_LAMBDA_RANGE
    points_per_octave: int = POINTS_PER_OCTAVE
    allow_aliasing: bool = False
    window_scale: float = DEFAULT_WINDOW_SCALE
    small_window_scale: float = SMALL_REGIME_WINDOW_SCALE
    large_window_scale: float = LARGE_REGIME_WINDOW_SCALE
    phase: str = 'kohn-nirenberg'
    coefficients: tuple = None
    symbol: str = 'gaussian-pair'
    input_family: str = 'gaussian'
    lam: float = 1.0
    input: str = None
    p: str = 'inf'
    q: str = '1'
    r1: str = '2'
    r2: str = '2'
    t1: str = '2'
    t2: str = '2'
    s1: float = 0.0
    s2: float = 0.0
    k: int = 64
    checker: str = 'pseudo'
    fixed: str = ''
    x: float = 0.0
    omega: float = 0.0
    x2: float = 0.0
    omega2: float = 0.0
    out: str = 'out'
    plot: bool = False
    workers: int = 1
    verbosity: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'small_range', tuple(float(v) for v in self.small_range))
        object.__setattr__(self, 'large_range', tuple(float(v) for v in self.large_range))
        if self.coefficients is not None:
            object.__setattr__(self, 'coefficients', tuple(float(v) for v in self.coefficients))
        for name in EXPONENT_FIELDS:
            object.__setattr__(self, name, str(getattr(self, name)))
        self.validate()

    def record(self):
        record = asdict(self)
        record['small_range'] = list(self.small_range)
        record['large_range'] = list(self.large_range)
        if self.coefficients is not None:
            record['coefficients'] = list(self.coefficients)
        return record

    def validate(self):
        try:
            jsonschema.validate(self.record(), CONFIG_SCHEMA)
        except jsonschema.ValidationError as e:
            raise ConfigError('invalid configuration: ' + e.message)
        if not is_power_of_two(self.n):
            raise ConfigError('grid size must be a power of two, got ' + str(self.n))
        for name in EXPONENT_FIELDS:
            try:
                parse_exponent(getattr(self, name))
            except ParameterError as e:
                raise ConfigError(str(e))
        for name in ('small_range', 'large_range'):
            lo, hi = getattr(self, name)
            if not lo < hi:
                raise ConfigError(name + ' must satisfy lo < hi, got ' + str((lo, hi)))
            if not self.allow_aliasing and (lo < LAMBDA_MIN or hi > LAMBDA_MAX):
                raise ConfigError(name + ' ' + str((lo, hi)) + ' leaves [1/8, 8]; pass allow_aliasing to accept it')

    def recip(self, name):
        return parse_exponent(getattr(self, name))

    @property
    def exponents(self):
        return {name: self.recip(name) for name in EXPONENT_FIELDS}

    @classmethod
    def from_args(cls, args):
        coefficients = parse_floats(args.coefficients) if args.coefficients else None
        try:
            return cls(n=args.n, extent=args.extent, d=args.d,
                       small_range=tuple(parse_floats(args.small_range)),
                       large_range=tuple(parse_floats(args.large_range)),
                       points_per_octave=args.points_per_octave, allow_aliasing=args.allow_aliasing,
                       window_scale=args.window_scale, small_window_scale=args.small_window_scale,
                       large_window_scale=args.large_window_scale, phase=args.phase, coefficients=coefficients,
                       symbol=args.symbol, input_family=args.input_family, lam=args.lam, input=args.input,
                       p=args.p, q=args.q, r1=args.r1, r2=args.r2, t1=args.t1, t2=args.t2,
                       s1=args.s1, s2=args.s2, k=args.k, checker=args.checker, fixed=args.fixed,
                       x=args.x, omega=args.omega, x2=args.x2, omega2=args.omega2, out=args.out,
                       plot=args.plot, workers=args.workers, verbosity=args.verbosity)
        except (TypeError, ValueError) as e:
            raise ConfigError('invalid configuration: ' + str(e))

    def with_values(self, **changes):
        record = asdict(self)
        record.update(changes)
        return ExperimentConfig(**record)
