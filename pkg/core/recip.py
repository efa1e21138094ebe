from fractions import Fraction
from core.exceptions import ParameterError

INFINITY_LABELS = ('inf', 'infinity', '∞', 'oo')


class Recip(Fraction):
    """
    Exact reciprocal 1/p of an exponent p in [1, ∞]; 0 stands for p = ∞
    """

    def __new__(cls, numerator=0, denominator=None):
        self = super(Recip, cls).__new__(cls, numerator, denominator)
        if self < 0 or self > 1:
            raise ParameterError('reciprocal exponent must lie in [0, 1], got ' + str(Fraction(self)))
        return self

    @property
    def exponent(self):
        """
        The exponent p itself as a float (inf for the zero reciprocal)
        """
        if self == 0:
            return float('inf')
        return float(1 / Fraction(self))

    def label(self):
        if self == 0:
            return 'inf'
        return str(1 / Fraction(self))

    def __repr__(self):
        return 'Recip(' + str(Fraction(self)) + ')'


def parse_exponent(text):
    """
    Parses an exponent p ('inf', '2', '4/3', '1.5') into its reciprocal
    """
    if isinstance(text, Recip):
        return text
    token = str(text).strip().lower()
    if token in INFINITY_LABELS:
        return Recip(0)
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParameterError('cannot parse exponent: ' + str(text))
    if value < 1:
        raise ParameterError('exponent must be >= 1, got ' + str(text))
    return Recip(1 / value)


def parse_reciprocal(text):
    """
    Parses a reciprocal value 1/p given directly ('0', '1/4', '0.5')
    """
    try:
        return Recip(Fraction(str(text).strip()))
    except (ValueError, ZeroDivisionError):
        raise ParameterError('cannot parse reciprocal: ' + str(text))


def conjugate(x):
    """
    Reciprocal of the conjugate exponent: 1/p' = 1 - 1/p
    """
    return Recip(1 - Fraction(x))
