import json
import logging
import itertools
import numpy as np
import pandas as pd
from dataclasses import dataclass, field
from fractions import Fraction
from core.exceptions import ParameterError
from lib.exponents.checkers import kernel_for
from lib.exponents.indices import COORDINATES

logger = logging.getLogger(__name__)

EXISTENTIAL = '*'


def render(value, k):
    """
    Lattice unit count as an exact fraction 'num/den'
    """
    fraction = Fraction(int(value), k)
    return str(fraction.numerator) + '/' + str(fraction.denominator)


@dataclass
class RegionResult:
    checker: str
    axes: tuple
    k: int
    admissible: np.ndarray
    fixed: dict = field(default_factory=dict)

    @property
    def count(self):
        return int(np.sum(self.admissible))

    @property
    def area_fraction(self):
        return self.count / float(self.admissible.size)

    def contains(self, other):
        """
        Cellwise inclusion of another region on the same lattice
        """
        return bool(np.all(self.admissible | ~other.admissible))

    def to_frame(self):
        first, second = np.meshgrid(np.arange(self.k + 1), np.arange(self.k + 1), indexing='ij')
        return pd.DataFrame({
            'coord1': [render(v, self.k) for v in first.ravel()],
            'coord2': [render(v, self.k) for v in second.ravel()],
            'admissible': self.admissible.ravel(),
        })

    def summary(self):
        return {
            'checker': self.checker,
            'axes': list(self.axes),
            'k': self.k,
            'fixed': self.fixed,
            'admissible': self.count,
            'area_fraction': self.area_fraction,
        }

    def to_csv(self, path):
        self.to_frame().to_csv(path, index=False)
        logger.info('region written to ' + str(path))

    def to_json(self, path):
        with open(path, 'w') as f:
            json.dump(self.summary(), f, indent=2)

    def to_dat(self, path):
        """
        gnuplot friendly matrix: one row per coord1 value
        """
        with open(path, 'w') as f:
            f.write('# ' + self.checker + ' ' + ' '.join(self.axes) + ' k=' + str(self.k) + '\n')
            for first in range(self.k + 1):
                for second in range(self.k + 1):
                    f.write(str(first / self.k) + ' ' + str(second / self.k) + ' '
                            + str(int(self.admissible[first, second])) + '\n')
                f.write('\n')


def _lattice_units(name, value, k):
    units = Fraction(str(value)) * k
    if units.denominator != 1 or not 0 <= units <= k:
        raise ParameterError('fixed ' + name + ' = ' + str(value) + ' is not on the 1/' + str(k) + ' lattice')
    return int(units)


def region_scan(checker, fixed, k=64, s1=0.0, s2=0.0, d=1):
    """
    Exhaustive evaluation of a checker over the (k+1)² lattice of its two free
    reciprocal coordinates. Each other coordinate is either fixed to a reciprocal,
    tied to another coordinate by name, or existential ('*'), in which case it is
    projected out by searching the same lattice.
    """
    kernel = kernel_for(checker)
    if k < 1:
        raise ParameterError('region resolution must be >= 1, got ' + str(k))
    unknown = set(fixed) - set(COORDINATES)
    if unknown:
        raise ParameterError('unknown coordinates: ' + ', '.join(sorted(unknown)))
    free = [name for name in COORDINATES if name not in fixed]
    if len(free) != 2:
        raise ParameterError('region scan needs exactly two free coordinates, got ' + str(free))
    existential = [name for name, value in fixed.items() if value == EXISTENTIAL]
    tied = {name: value for name, value in fixed.items() if value in COORDINATES}
    for name, target in tied.items():
        if target in tied or target == name:
            raise ParameterError('coordinate ' + name + ' is tied to a tied coordinate ' + target)
    constant = {name: _lattice_units(name, value, k) for name, value in fixed.items()
                if name not in existential and name not in tied}

    first, second = np.meshgrid(np.arange(k + 1), np.arange(k + 1), indexing='ij')
    admissible = np.zeros(first.shape, dtype=bool)
    for choice in itertools.product(range(k + 1), repeat=len(existential)):
        values = dict(constant)
        values[free[0]] = first
        values[free[1]] = second
        values.update(zip(existential, choice))
        for name, target in tied.items():
            values[name] = values[target]
        admissible |= np.broadcast_to(kernel(values, k, s1, s2, d), first.shape)

    result = RegionResult(checker, tuple(free), k, admissible,
                          {name: str(value) for name, value in fixed.items()})
    logger.info(checker + ' region on ' + str(free) + ': ' + str(result.count) + ' admissible points')
    return result


def parse_fixed(text):
    """
    'r1=t1, t1=*, p=1/2' -> {'r1': 't1', 't1': '*', 'p': '1/2'}
    """
    fixed = {}
    for item in str(text or '').replace(' ', '').split(','):
        if not item:
            continue
        name, sep, value = item.partition('=')
        if not sep or not value:
            raise ParameterError('fixed coordinate must read name=value, got ' + item)
        fixed[name] = value
    return fixed
