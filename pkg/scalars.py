"""Exact scalar fields: rationals (q = 1) and rational functions in q.

Both fields are sympy domains, so matrices over them are plain
``DomainMatrix`` objects. Rationals live in ``QQ``; rational functions live in
``ZZ(q)`` whose elements are kept reduced (coprime numerator/denominator,
denominator with positive leading coefficient) by sympy itself.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ, ZZ, Rational, Symbol, sympify
from sympy.polys.polyerrors import CoercionFailed

log = logging.getLogger('SCALARS')

MODE_Q1 = 'q1'
MODE_HECKE = 'hecke'
MODE_FLOAT = 'float-SON'


class PoleError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class HeckeParams:
    """Hecke parameter symbol for every generator (by generator index)."""
    symbols: tuple

    @classmethod
    def single(cls, rank, name='q'):
        return cls(tuple([name] * rank))

    @classmethod
    def per_class(cls, generator_classes):
        # generator_classes[s] is a class id, conjugate generators share one id
        names = {}
        symbols = []
        for class_id in generator_classes:
            if class_id not in names:
                names[class_id] = 'q' if not names else f'q{len(names) + 1}'
            symbols.append(names[class_id])
        return cls(tuple(symbols))

    @property
    def names(self):
        return tuple(dict.fromkeys(self.symbols))

    def check(self, generator_classes):
        for s, class_s in enumerate(generator_classes):
            for t, class_t in enumerate(generator_classes):
                if class_s == class_t and self.symbols[s] != self.symbols[t]:
                    raise ValueError(f'conjugate generators {s + 1} and {t + 1} '
                                     f'carry different parameters {self.symbols[s]}, {self.symbols[t]}')

    def field(self):
        return hecke_field(self.names)

    def parameter(self, field, s):
        names = [str(symbol) for symbol in field.symbols]
        return field.gens[names.index(self.symbols[s])]


def hecke_field(names=('q',)):
    return ZZ.frac_field(*[Symbol(name) for name in names])


def field_for(mode, params=None):
    if mode == MODE_Q1:
        return QQ
    if mode == MODE_HECKE:
        return params.field() if params is not None else hecke_field()
    raise ValueError(f'mode "{mode}" has no exact field')


def is_rational_field(field):
    return field == QQ


def q_of(field):
    if is_rational_field(field):
        return QQ.one
    return field.gens[0]


def from_fraction(value, field):
    value = Fraction(value)
    return field.convert(value.numerator) / field.convert(value.denominator)


def to_fraction(x):
    """Exact rational value of a ``QQ`` element (or a constant rational function)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    numerator = getattr(x, 'numer', None)
    if numerator is not None and not isinstance(numerator, int):
        if numerator.is_ground and x.denom.is_ground:
            return Fraction(int(numerator.LC), int(x.denom.LC))
        raise ValueError(f'{render(x)} is not a rational constant')
    return Fraction(int(x.numerator), int(x.denominator))


def q_integer(k, field=QQ, q=None):
    """[k]_q = (1 - q^k) / (1 - q); equals k on the rational field."""
    if is_rational_field(field):
        return QQ(k)
    q = q_of(field) if q is None else q
    one = field.one
    power = q ** k if k >= 0 else one / q ** (-k)
    return (one - power) / (one - q)


def d_coefficient(a, field=QQ, q=None):
    """d = 1 - (1 - q)/a."""
    if not a:
        raise PoleError('the a-coefficient must be nonzero')
    one = field.one
    q = q_of(field) if q is None else q
    return one - (one - q) / a


def a_from_d(d, field=QQ, q=None):
    one = field.one
    if d == one:
        raise PoleError('d = 1 has no a-coefficient')
    q = q_of(field) if q is None else q
    return (one - q) / (one - d)


def q_exponent(x, field, q=None):
    """k when x equals q^k exactly (coefficient 1, no other parameter), else None."""
    if is_rational_field(field):
        return 0 if x == QQ.one else None
    q = q_of(field) if q is None else q
    variable = field.gens.index(q)
    numerator, denominator = x.numer, x.denom
    if len(numerator.terms()) != 1 or len(denominator.terms()) != 1:
        return None
    (n_monom, n_coeff), = numerator.terms()
    (d_monom, d_coeff), = denominator.terms()
    if n_coeff != 1 or d_coeff != 1:
        return None
    if any(n_monom[i] or d_monom[i] for i in range(field.ngens) if i != variable):
        return None
    return n_monom[variable] - d_monom[variable]


def specialize(x, q_value, field):
    """Exact rational value of x at q = q_value (a number or one value per symbol)."""
    if is_rational_field(field):
        return x
    values = q_value if isinstance(q_value, (list, tuple)) else [q_value] * field.ngens
    point = {}
    for symbol, value in zip(field.symbols, values):
        value = Fraction(value)
        point[symbol] = Rational(value.numerator, value.denominator)
    denominator = x.denom.as_expr().subs(point)
    if denominator == 0:
        raise PoleError(f'{render(x, field)} has a pole at q = {q_value}')
    return QQ.from_sympy(x.numer.as_expr().subs(point) / denominator)


def _monomial(monom, symbols):
    parts = []
    for exponent, symbol in zip(monom, symbols):
        if exponent == 1:
            parts.append(symbol)
        elif exponent:
            parts.append(f'{symbol}^{exponent}')
    return '*'.join(parts)


def _render_poly(poly, symbols):
    terms = sorted(poly.terms(), key=lambda term: (sum(term[0]), tuple(term[0])))
    if not terms:
        return '0'
    text = ''
    for position, (monom, coeff) in enumerate(terms):
        coeff = int(coeff)
        body = _monomial(monom, symbols)
        magnitude = abs(coeff)
        if body:
            piece = body if magnitude == 1 else f'{magnitude}*{body}'
        else:
            piece = str(magnitude)
        if position == 0:
            text = f'-{piece}' if coeff < 0 else piece
        else:
            text += f' - {piece}' if coeff < 0 else f' + {piece}'
    return text


def render(x, field=None):
    """Canonical string: "-1/2" for rationals, "(-1 + q^2)/(1 - q)" for rational functions."""
    if isinstance(x, float):
        return repr(x)
    numerator = getattr(x, 'numer', None)
    if numerator is None or isinstance(numerator, int):
        numerator, denominator = int(x.numerator), int(x.denominator)
        return str(numerator) if denominator == 1 else f'{numerator}/{denominator}'
    symbols = [str(symbol) for symbol in x.field.symbols]
    top = _render_poly(x.numer, symbols)
    bottom = _render_poly(x.denom, symbols)
    if bottom == '1':
        return top
    if len(x.denom.terms()) > 1:
        bottom = f'({bottom})'
    return f'({top})/{bottom}'


def parse(text, field):
    """Inverse of ``render`` (any sympy-readable expression is accepted)."""
    names = {str(symbol): Symbol(str(symbol)) for symbol in getattr(field, 'symbols', ())}
    try:
        expression = sympify(str(text), locals=names)
        return field.from_sympy(expression)
    except (CoercionFailed, TypeError, ValueError, SyntaxError) as error:
        raise ValueError(f'can\'t read scalar "{text}": {error}') from error
