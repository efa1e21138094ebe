"""
Decision procedures for the index conditions of the boundedness theorems.

Every kernel works on reciprocal exponents expressed in units of 1/one: with
Fractions one = 1, with integer lattice arrays one = k. Conditions are combined
with & and | so the same kernel answers a single tuple or a whole lattice.
"""
import numpy as np
from fractions import Fraction
from core.exceptions import ParameterError
from core.recip import conjugate
from lib.exponents.indices import COORDINATES, IndexTuple

__all__ = ['conjugate', 'check_pseudo', 'check_diagonal', 'check_d2fix', 'check_toft',
           'check_schrodinger_multiplier', 'check_weighted_elefabio', 'check_weighted_main',
           'check_necessary_prop', 'CHECKERS', 'lattice_violations']


def _exact(s):
    return Fraction(str(s))


def _nonnegative(s):
    return _exact(s) >= 0


def _exceeds(s, diff, d, one):
    """
    s > d·diff/one, relaxed to s >= 0 on the equality case diff = 0
    """
    s = _exact(s)
    lhs = s.numerator * one
    rhs = d * diff * s.denominator
    return (lhs > rhs) | ((diff == 0) & (lhs >= 0))


def _gap_conditions(c, one):
    gap = one - c['p'] - c['q']
    return (c['r1'] - c['t1'] >= gap) & (c['r2'] - c['t2'] >= gap)


def _pseudo(c, one, s1=0, s2=0, d=1):
    q = c['q']
    return (_gap_conditions(c, one) & (q >= c['t1']) & (q >= c['t2'])
            & (q >= one - c['r1']) & (q >= one - c['r2']))


def _diagonal(c, one, s1=0, s2=0, d=1):
    q = c['q']
    return (q >= c['t1']) & (q >= one - c['r1']) & (c['r1'] - c['t1'] >= one - c['p'] - q)


def _d2fix(c, one, s1=0, s2=0, d=1):
    q = c['q']
    return (c['r2'] >= c['r1']) & (q >= c['r2']) & (q >= one - c['r1']) & (c['p'] + q >= one)


def _toft(c, one, s1=0, s2=0, d=1):
    gap = one - c['p'] - c['q']
    equalities = (c['r1'] - c['t1'] == gap) & (c['r2'] - c['t2'] == gap)
    bounds = ((c['q'] >= c['t1']) & (c['t1'] >= c['p'])
              & (c['q'] >= c['t2']) & (c['t2'] >= c['p']))
    return equalities & bounds


def _schrodinger(c, one, s1=0, s2=0, d=1):
    return (c['r1'] >= c['t1']) & (c['r2'] >= c['t2'])


def _weighted_pair(c, one, s1=0, s2=0, d=1):
    r1, r2 = c['r1'], c['r2']
    equal = (r1 == r2) & _nonnegative(s1) & _nonnegative(s2)
    first_larger = (r2 > r1) & _exceeds(s1, r2 - r1, d, one) & _nonnegative(s2)
    second_larger = (r1 > r2) & _nonnegative(s1) & _exceeds(s2, r1 - r2, d, one)
    return equal | first_larger | second_larger


def _main(c, one, s1=0, s2=0, d=1):
    q, r1, r2, t1, t2 = c['q'], c['r1'], c['r2'], c['t1'], c['t2']
    first = _nonnegative(s2) & (
        ((q >= t1) & (q >= t2) & (q >= one - r1) & (r2 >= r1) & _exceeds(s1, r2 - r1, d, one))
        | ((q >= t2) & (q >= one - r1) & (q >= one - r2) & (t2 >= t1) & _exceeds(s1, t2 - t1, d, one)))
    second = _nonnegative(s1) & (
        ((q >= t1) & (q >= t2) & (q >= one - r2) & (r1 >= r2) & _exceeds(s2, r1 - r2, d, one))
        | ((q >= t1) & (q >= one - r1) & (q >= one - r2) & (t1 >= t2) & _exceeds(s2, t1 - t2, d, one)))
    return _gap_conditions(c, one) & (first | second)


def _necessary(c, one, s1=0, s2=0, d=1):
    q = c['q']
    gap = one - c['p'] - q
    return ((c['r1'] - c['t2'] >= gap) & (c['r2'] - c['t2'] >= gap)
            & (q >= c['t1']) & (q >= c['t2']) & (q >= one - c['r1']) & (q >= one - c['r2']))


CHECKERS = {
    'pseudo': _pseudo,
    'diagonal': _diagonal,
    'd2fix': _d2fix,
    'toft': _toft,
    'schrodinger': _schrodinger,
    'weighted-pair': _weighted_pair,
    'main': _main,
    'necessary': _necessary,
}


def kernel_for(checker):
    if checker not in CHECKERS:
        raise ParameterError('unknown checker ' + str(checker) + ', expected one of ' + ', '.join(CHECKERS))
    return CHECKERS[checker]


def _evaluate(kernel, t):
    return bool(kernel(t.coordinates(), 1, t.s1, t.s2, t.d))


def check_pseudo(t):
    """
    1/r_i - 1/t_i >= 1 - 1/p - 1/q and q <= min(t1, t2, r1', r2')
    """
    return _evaluate(_pseudo, t)


def check_diagonal(p, q, r, t):
    return _evaluate(_diagonal, IndexTuple(p, q, r, r, t, t))


def check_d2fix(p, q, r1, r2):
    """
    r2 <= r1, q <= min(r2, r1') and 1/p + 1/q >= 1, targets (t1, t2) = (r2, r1)
    """
    return _evaluate(_d2fix, IndexTuple(p, q, r1, r2, r2, r1))


def check_toft(t):
    return _evaluate(_toft, t)


def check_schrodinger_multiplier(r1, r2, t1, t2):
    """
    r_i <= t_i for i = 1, 2
    """
    return _evaluate(_schrodinger, IndexTuple(0, 1, r1, r2, t1, t2))


def check_weighted_elefabio(r1, r2, s1, s2, d=1):
    return _evaluate(_weighted_pair, IndexTuple(0, 1, r1, r2, r2, r1, s1, s2, d))


def check_weighted_main(t):
    return _evaluate(_main, t)


def check_necessary_prop(t):
    return _evaluate(_necessary, t)


def _steps(values, axis, upward):
    """
    Pairs (value at i, value one lattice step further) along an axis
    """
    size = values.shape[axis]
    lower = np.take(values, range(0, size - 1), axis=axis)
    upper = np.take(values, range(1, size), axis=axis)
    return (lower, upper) if upward else (upper, lower)


def lattice_violations(k=4):
    """
    Counts violations of the structural invariants over the lattice {0, 1/k, ..., 1}^6
    """
    if k < 1:
        raise ParameterError('lattice resolution must be >= 1, got ' + str(k))
    full = dict(zip(COORDINATES, np.indices((k + 1,) * 6)))
    pseudo = _pseudo(full, k)
    violations = {'containment': int(np.sum(_toft(full, k) & ~pseudo))}

    embedding = 0
    for name, upward in (('r1', True), ('r2', True), ('t1', False), ('t2', False)):
        before, after = _steps(pseudo, COORDINATES.index(name), upward)
        embedding += int(np.sum(before & ~after))
    violations['embedding'] = embedding

    symbol = 0
    for name in ('p', 'q'):
        before, after = _steps(pseudo, COORDINATES.index(name), True)
        symbol += int(np.sum(before & ~after))
    violations['symbol_class'] = symbol

    p, q, r, t = np.indices((k + 1,) * 4)
    diagonal = {'p': p, 'q': q, 'r1': r, 'r2': r, 't1': t, 't2': t}
    violations['specialization'] = int(np.sum(_pseudo(diagonal, k) != _diagonal(diagonal, k)))

    p, q, r1, r2 = np.indices((k + 1,) * 4)
    swapped = {'p': p, 'q': q, 'r1': r1, 'r2': r2, 't1': r2, 't2': r1}
    mismatch = (_necessary(swapped, k) != _d2fix(swapped, k)) & (r2 >= r1)
    violations['necessary_d2fix'] = int(np.sum(mismatch))
    return violations
