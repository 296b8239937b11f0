# -*- coding: utf-8 -*-
"""Exact arithmetic in cyclotomic fields Q(zeta_M)

Values are stored in the power basis of Q(zeta_M) reduced modulo the M-th
cyclotomic polynomial, constant term first, so two values of the same order are
equal exactly when their coordinates are.

"""
import logging
import math
from fractions import Fraction
from functools import lru_cache
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.factortools import dup_zz_cyclotomic_poly
from nichols_tools.exceptions import ScalarParseError, ScalarDivisionError, NotRootOfUnityError

logger = logging.getLogger(__name__)

#returned by mult_order when no power of the value is 1
NOT_ROOT_OF_UNITY = math.inf

_ZERO = QQ(0)
_ONE = QQ(1)


@lru_cache(maxsize=None)
def cyclotomic_modulus(order: int) -> tuple:
    """Coefficients of the order-th cyclotomic polynomial, constant term first"""
    return tuple(int(c) for c in reversed(dup_zz_cyclotomic_poly(order, ZZ)))


def field_degree(order: int) -> int:
    return len(cyclotomic_modulus(order)) - 1


def _rational(value):
    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    raise TypeError(f'cannot use {type(value).__name__} as a rational coefficient')


def _reduce(coeffs: list, order: int) -> tuple:
    """reduce a constant-term-first coefficient list modulo the cyclotomic polynomial"""
    modulus = cyclotomic_modulus(order)
    degree = len(modulus) - 1
    for k in range(len(coeffs) - 1, degree - 1, -1):
        c = coeffs[k]
        if c:
            shift = k - degree
            for j in range(degree):
                if modulus[j]:
                    coeffs[shift + j] -= c * modulus[j]
    if len(coeffs) < degree:
        coeffs = coeffs + [_ZERO] * (degree - len(coeffs))
    return tuple(coeffs[:degree])


class CycScalar:
    """An element of the cyclotomic field Q(zeta_order)

    Values are immutable. Equal values of different orders compare equal after
    embedding into the lcm field, but only hash alike when they are rational,
    so dictionaries should hold values of a single order.
    """
    __slots__ = ('order', 'coeffs')

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError(f'cyclotomic order must be positive, got {order}')
        values = [_rational(c) for c in coeffs]
        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'coeffs', _reduce(values, order))

    def __setattr__(self, name, value):
        raise AttributeError('CycScalar is immutable')

    @classmethod
    def _from_reduced(cls, order: int, coeffs: tuple):
        obj = object.__new__(cls)
        object.__setattr__(obj, 'order', order)
        object.__setattr__(obj, 'coeffs', coeffs)
        return obj

    @classmethod
    def from_rational(cls, order: int, value):
        coeffs = [_ZERO] * field_degree(order)
        coeffs[0] = _rational(value)
        return cls._from_reduced(order, tuple(coeffs))

    @classmethod
    def zero(cls, order: int):
        return _zero(order)

    @classmethod
    def one(cls, order: int):
        return _one(order)

    @classmethod
    def zeta(cls, order: int, power: int = 1):
        """zeta_order ** power"""
        return _zeta_power(order, power % order)

    @classmethod
    def from_string(cls, text: str, order: int):
        """parse an expression such as '-z^2', '1' or 'z^4 + z' where z is zeta_order"""
        return _ScalarParser(text, order).parse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        coeffs = self.coeffs
        return coeffs[0] == 1 and not any(coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def embed(self, order: int):
        """the same value written in Q(zeta_order); order must be a multiple of self.order"""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f'cannot embed order {self.order} into order {order}')
        factor = order // self.order
        spread = [_ZERO] * ((len(self.coeffs) - 1) * factor + 1)
        for k, c in enumerate(self.coeffs):
            spread[k * factor] = c
        return CycScalar._from_reduced(order, _reduce(spread, order))

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.order == self.order:
                return self, other
            order = math.lcm(self.order, other.order)
            return self.embed(order), other.embed(order)
        if isinstance(other, (int, Fraction, QQ.dtype)):
            return self, CycScalar.from_rational(self.order, other)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycScalar._from_reduced(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycScalar._from_reduced(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycScalar._from_reduced(a.order, tuple(y - x for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self):
        return CycScalar._from_reduced(self.order, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if a.is_one():
            return b
        if b.is_one():
            return a
        size = len(a.coeffs)
        if size == 1:
            return CycScalar._from_reduced(a.order, (a.coeffs[0] * b.coeffs[0],))
        product = [_ZERO] * (2 * size - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        product[i + j] += x * y
        return CycScalar._from_reduced(a.order, _reduce(product, a.order))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ScalarDivisionError('the zero scalar has no inverse')
        return _invert(self.order, self.coeffs)

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = _one(self.order)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def mult_order(self):
        """least k >= 1 with self**k == 1, or NOT_ROOT_OF_UNITY"""
        if self.is_zero():
            raise ScalarDivisionError('zero has no multiplicative order')
        return _mult_order(self.order, self.coeffs)

    def root_exponent(self) -> tuple:
        """(level, k) with self == zeta_level**k, where level is the order or twice it"""
        t = self.mult_order()
        if t == NOT_ROOT_OF_UNITY:
            raise NotRootOfUnityError(f'{self} is not a root of unity')
        level = self.order if self.order % t == 0 else 2 * self.order
        value = self.embed(level)
        step = level // t
        for k in range(0, level, step):
            if CycScalar.zeta(level, k) == value:
                return level, k
        raise NotRootOfUnityError(f'{self} is not a power of zeta_{level}')

    def sqrt_root_of_unity(self):
        """canonical square root zeta_(2 level)**k of zeta_level**k"""
        level, k = self.root_exponent()
        return CycScalar.zeta(2 * level, k)

    def __str__(self):
        terms = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if not c:
                continue
            if power == 0:
                terms.append(_format_rational(c))
                continue
            monomial = 'z' if power == 1 else f'z^{power}'
            if c == 1:
                terms.append(monomial)
            elif c == -1:
                terms.append('-' + monomial)
            else:
                terms.append(f'{_format_rational(c)}*{monomial}')
        if not terms:
            return '0'
        text = terms[0]
        for term in terms[1:]:
            text += ' - ' + term[1:] if term.startswith('-') else ' + ' + term
        return text

    def __repr__(self):
        return f"CycScalar({self.order}, '{self}')"


def _format_rational(value) -> str:
    numerator, denominator = int(value.numerator), int(value.denominator)
    return str(numerator) if denominator == 1 else f'{numerator}/{denominator}'


@lru_cache(maxsize=None)
def _zero(order: int) -> CycScalar:
    return CycScalar._from_reduced(order, (_ZERO,) * field_degree(order))


@lru_cache(maxsize=None)
def _one(order: int) -> CycScalar:
    return CycScalar.from_rational(order, 1)


@lru_cache(maxsize=None)
def _zeta_power(order: int, power: int) -> CycScalar:
    coeffs = [_ZERO] * (power + 1)
    coeffs[power] = _ONE
    return CycScalar._from_reduced(order, _reduce(coeffs, order))


@lru_cache(maxsize=65536)
def _invert(order: int, coeffs: tuple) -> CycScalar:
    if len(coeffs) == 1:
        return CycScalar._from_reduced(order, (_ONE / coeffs[0],))
    f = dup_strip(list(reversed(coeffs)))
    g = [QQ(c) for c in reversed(cyclotomic_modulus(order))]
    inverse = dup_invert(f, g, QQ)
    return CycScalar._from_reduced(order, _reduce(list(reversed(inverse)), order))


@lru_cache(maxsize=65536)
def _mult_order(order: int, coeffs: tuple):
    value = CycScalar._from_reduced(order, coeffs)
    power = value
    for k in range(1, 2 * order + 1):
        if power.is_one():
            return k
        power = power * value
    return NOT_ROOT_OF_UNITY


def q_int(k: int, q: CycScalar) -> CycScalar:
    """(k)_q = 1 + q + ... + q^(k-1)"""
    total = CycScalar.zero(q.order)
    power = CycScalar.one(q.order)
    for _ in range(k):
        total = total + power
        power = power * q
    return total


def q_factorial(k: int, q: CycScalar) -> CycScalar:
    """(k)_q! = (1)_q (2)_q ... (k)_q, with (0)_q! = 1"""
    result = CycScalar.one(q.order)
    for t in range(1, k + 1):
        result = result * q_int(t, q)
    return result


def is_primitive_root(value: CycScalar, degree: int) -> bool:
    """membership in R_degree, the primitive degree-th roots of unity"""
    return not value.is_zero() and value.mult_order() == degree


class _ScalarParser:
    """recursive-descent reader for sums of terms like '3/2*z^4', '-z', '2'"""

    def __init__(self, text: str, order: int):
        self.text = text
        self.order = order
        self.pos = 0

    def parse(self) -> CycScalar:
        self._skip()
        if self.pos >= len(self.text):
            self._fail('empty expression')
        sign = self._sign()
        total = self._term() * (sign or 1)
        self._skip()
        while self.pos < len(self.text):
            sign = self._sign()
            if sign is None:
                self._fail("expected '+' or '-'")
            total = total + self._term() * sign
            self._skip()
        return total

    def _term(self) -> CycScalar:
        self._skip()
        coeff = None
        if self._peek().isdigit():
            coeff = self._rational()
            self._skip()
            if self._peek() == '*':
                self.pos += 1
                self._skip()
                if self._peek() != 'z':
                    self._fail("expected 'z'")
            elif self._peek() != 'z':
                return CycScalar.from_rational(self.order, coeff)
        if self._peek() != 'z':
            self._fail("expected a number or 'z'")
        self.pos += 1
        exponent = 1
        self._skip()
        if self._peek() == '^':
            self.pos += 1
            self._skip()
            exponent = self._integer()
        value = CycScalar.zeta(self.order, exponent)
        return value if coeff is None else value * coeff

    def _rational(self):
        numerator = self._integer()
        if self._peek() == '/':
            self.pos += 1
            denominator = self._integer()
            if denominator == 0:
                self._fail('zero denominator')
            return QQ(numerator, denominator)
        return QQ(numerator)

    def _integer(self) -> int:
        start = self.pos
        while self._peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self._fail('expected digits')
        return int(self.text[start:self.pos])

    def _sign(self):
        self._skip()
        char = self._peek()
        if char and char in '+-':
            self.pos += 1
            return 1 if char == '+' else -1
        return None

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _fail(self, message: str):
        raise ScalarParseError(self.text, self.pos + 1, message)
