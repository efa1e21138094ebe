from dataclasses import dataclass, replace
from fractions import Fraction
from core.exceptions import ParameterError
from core.recip import Recip, parse_exponent

COORDINATES = ('p', 'q', 'r1', 'r2', 't1', 't2')


@dataclass(frozen=True)
class IndexTuple:
    """
    Reciprocal exponents (1/p, 1/q, 1/r1, 1/r2, 1/t1, 1/t2) with optional weights and dimension
    """
    p: Recip = Recip(0)
    q: Recip = Recip(1)
    r1: Recip = Recip(1, 2)
    r2: Recip = Recip(1, 2)
    t1: Recip = Recip(1, 2)
    t2: Recip = Recip(1, 2)
    s1: float = 0.0
    s2: float = 0.0
    d: int = 1

    def __post_init__(self):
        for name in COORDINATES:
            value = getattr(self, name)
            if not isinstance(value, Recip):
                object.__setattr__(self, name, Recip(Fraction(value)))
        if int(self.d) != self.d or self.d < 1:
            raise ParameterError('dimension must be a positive integer, got ' + str(self.d))

    @classmethod
    def from_exponents(cls, p='inf', q='1', r1='2', r2='2', t1='2', t2='2', s1=0.0, s2=0.0, d=1):
        """
        Builds a tuple from the exponents themselves ('inf', '2', '4/3')
        """
        return cls(parse_exponent(p), parse_exponent(q), parse_exponent(r1), parse_exponent(r2),
                   parse_exponent(t1), parse_exponent(t2), s1, s2, d)

    def coordinates(self):
        return {name: getattr(self, name) for name in COORDINATES}

    def with_values(self, **changes):
        return replace(self, **changes)

    def describe(self):
        record = {name: getattr(self, name).label() for name in COORDINATES}
        record.update({'s1': self.s1, 's2': self.s2, 'd': self.d})
        return record
