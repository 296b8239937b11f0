# -*- coding: utf-8 -*-
"""The free algebra T(V) with its braided structure

FreeElement is a sparse map word -> CycScalar over a BraidedSpace. Elements are
treated as immutable once built; all operations return new elements.

"""
import logging
from functools import lru_cache
from nichols_tools.algebra import words as wd
from nichols_tools.algebra.braiding import subtract_degrees, total_degree
from nichols_tools.algebra.linalg import Echelon, add_scaled, nullspace
from nichols_tools.algebra.scalar import CycScalar
from nichols_tools.exceptions import SpaceMismatchError

logger = logging.getLogger(__name__)

STD = 'std'
MINUS = 'minus'
C = 'c'
FLAVORS = (STD, MINUS, C)


class FreeElement:
    """finitely supported map from words to scalars"""
    __slots__ = ('space', 'terms', '_components')

    def __init__(self, space, terms: dict = None):
        self.space = space
        clean = {}
        for word, coeff in (terms or {}).items():
            scalar = space.scalar(coeff)
            if not scalar.is_zero():
                clean[tuple(word)] = scalar
        self.terms = clean
        self._components = None

    @classmethod
    def _trusted(cls, space, terms: dict):
        """wrap a dict already keyed by tuples with nonzero scalars of the space's order"""
        obj = cls.__new__(cls)
        obj.space = space
        obj.terms = terms
        obj._components = None
        return obj

    @classmethod
    def zero(cls, space):
        return cls._trusted(space, {})

    @classmethod
    def one(cls, space):
        return cls._trusted(space, {(): space.one()})

    @classmethod
    def generator(cls, space, letter: int):
        if not 1 <= letter <= space.n:
            raise ValueError(f'letter {letter} outside 1..{space.n}')
        return cls._trusted(space, {(letter,): space.one()})

    @classmethod
    def monomial(cls, space, word, coeff=1):
        return cls(space, {tuple(word): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word) -> CycScalar:
        return self.terms.get(tuple(word), self.space.zero())

    def _check_space(self, other):
        if other.space is not self.space and other.space != self.space:
            raise SpaceMismatchError(f'{self.space!r} and {other.space!r} differ')

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        self._check_space(other)
        return FreeElement._trusted(self.space, add_scaled(dict(self.terms), self.space.one(), other.terms))

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        self._check_space(other)
        return FreeElement._trusted(self.space, add_scaled(dict(self.terms), -self.space.one(), other.terms))

    def __neg__(self):
        return FreeElement._trusted(self.space, {word: -c for word, c in self.terms.items()})

    def scale(self, coeff):
        coeff = self.space.scalar(coeff)
        if coeff.is_zero():
            return FreeElement.zero(self.space)
        return FreeElement._trusted(self.space, {word: c * coeff for word, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            self._check_space(other)
            product = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    add_scaled(product, a * b, {u + v: self.space.one()})
            return FreeElement._trusted(self.space, product)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return (other.space is self.space or other.space == self.space) and self.terms == other.terms

    __hash__ = None

    def homogeneous_components(self) -> dict:
        """Z^n degree -> component; cached"""
        if self._components is None:
            parts = {}
            for word, coeff in self.terms.items():
                parts.setdefault(self.space.word_degree(word), {})[word] = coeff
            self._components = {d: FreeElement._trusted(self.space, t) for d, t in parts.items()}
        return self._components

    def is_homogeneous(self) -> bool:
        return len(self.homogeneous_components()) <= 1

    def degree(self) -> tuple:
        """the Z^n degree of a nonzero homogeneous element"""
        components = self.homogeneous_components()
        if len(components) != 1:
            raise ValueError('degree is only defined for nonzero homogeneous elements')
        return next(iter(components))

    def max_total_degree(self) -> int:
        return max((len(word) for word in self.terms), default=0)

    def to_strings(self) -> list:
        return [[wd.format_word(word, self.space.n), str(coeff)] for word, coeff in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for word, coeff in sorted(self.terms.items()):
            text = wd.format_word(word, self.space.n) or '1'
            parts.append(f'{text}' if coeff.is_one() else f'({coeff})*{text}')
        return ' + '.join(parts)

    def __repr__(self):
        return f'FreeElement({self})'


def free_product(a: FreeElement, b: FreeElement) -> FreeElement:
    return a * b


def bracket(a: FreeElement, b: FreeElement, flavor: str = STD, product=free_product) -> FreeElement:
    """[a, b] in flavor std (yx - p_yx xy), minus (xy - yx) or c (xy - p_xy yx)

    product multiplies two elements; pass a NicholsBasis product to bracket in B(V).
    """
    a._check_space(b)
    space = a.space
    if flavor == MINUS:
        return product(a, b) - product(b, a)
    if flavor not in (STD, C):
        raise ValueError(f'unknown bracket flavor {flavor!r}')
    result = FreeElement.zero(space)
    for dx, x in a.homogeneous_components().items():
        for dy, y in b.homogeneous_components().items():
            if flavor == STD:
                term = product(y, x) - product(x, y).scale(space.bicharacter(dy, dx))
            else:
                term = product(x, y) - product(y, x).scale(space.bicharacter(dx, dy))
            result = result + term
    return result


def bracketing(space, u, flavor: str = STD) -> FreeElement:
    """[u] (flavor std) or [u]^- (flavor minus) of a nonempty word, expanded in T(V)"""
    return _bracketing(space, tuple(u), flavor)


@lru_cache(maxsize=None)
def _bracketing(space, u: tuple, flavor: str) -> FreeElement:
    if flavor not in (STD, MINUS):
        raise ValueError(f'bracketing is defined for std and minus, not {flavor!r}')
    if not u:
        raise ValueError('bracketing needs a nonempty word')
    if len(u) == 1:
        return FreeElement.generator(space, u[0])
    if wd.is_lyndon(u):
        v, w = wd.shirshov_decomposition(u)
        left, right = _bracketing(space, v, flavor), _bracketing(space, w, flavor)
        if flavor == STD:
            return bracket(left, right, STD)
        return bracket(right, left, MINUS)
    factors = wd.lyndon_factorization(u)
    result = _bracketing(space, factors[0], flavor)
    for factor in factors[1:]:
        result = bracket(result, _bracketing(space, factor, flavor), flavor)
    return result


def left_adjoint(x: FreeElement, y: FreeElement, times: int = 1, product=free_product) -> FreeElement:
    """l_x^times(y) with l_x(y) = [x, y]"""
    for _ in range(times):
        y = bracket(x, y, STD, product)
    return y


def right_adjoint(x: FreeElement, y: FreeElement, times: int = 1, product=free_product) -> FreeElement:
    """r_x^times(y) with r_x(y) = [y, x]"""
    for _ in range(times):
        y = bracket(y, x, STD, product)
    return y


def power(x: FreeElement, exponent: int, product=free_product) -> FreeElement:
    result = FreeElement.one(x.space)
    for _ in range(exponent):
        result = product(result, x)
    return result


def skew_derivation(letter: int, element: FreeElement) -> FreeElement:
    """<y_letter, element> with <y_i, x_a w> = delta_ia w + chi(e_i, e_a)^-1 x_a <y_i, w>"""
    space = element.space
    e_i = space.letter_degree(letter)
    result = {}
    for word, coeff in element.terms.items():
        prefix_degree = [0] * space.n
        for k, a in enumerate(word):
            if a == letter:
                factor = space.bicharacter(e_i, tuple(prefix_degree)).inverse()
                add_scaled(result, coeff * factor, {word[:k] + word[k + 1:]: space.one()})
            prefix_degree[a - 1] += 1
    return FreeElement._trusted(space, result)


@lru_cache(maxsize=None)
def symmetrizer_image(space, word: tuple) -> dict:
    """S_m(word), pulling each letter to the front with its inverse braiding factor"""
    if len(word) <= 1:
        return {word: space.one()}
    image = {}
    prefix_degree = [0] * space.n
    for k, a in enumerate(word):
        factor = space.bicharacter(space.letter_degree(a), tuple(prefix_degree)).inverse()
        rest = symmetrizer_image(space, word[:k] + word[k + 1:])
        add_scaled(image, factor, {(a,) + tail: c for tail, c in rest.items()})
        prefix_degree[a - 1] += 1
    return image


def symmetrizer(space, degree: tuple) -> dict:
    """S on the degree block, as word -> image column"""
    return {word: symmetrizer_image(space, word) for word in wd.words_of_degree(degree)}


def symmetrizer_matrix(space, degree: tuple) -> tuple:
    """(words, rows) with rows[r][c] the coefficient of words[r] in S(words[c])"""
    block = wd.words_of_degree(degree)
    columns = symmetrizer(space, degree)
    rows = [[columns[col].get(row, space.zero()) for col in block] for row in block]
    return block, rows


@lru_cache(maxsize=None)
def symmetrizer_kernel(space, degree: tuple) -> Echelon:
    block = wd.words_of_degree(degree)
    columns = symmetrizer(space, degree)
    kernel = Echelon()
    for relation in nullspace([columns[word] for word in block], space.one()):
        kernel.insert({block[index]: c for index, c in relation.items()})
    return kernel


@lru_cache(maxsize=None)
def pairing_radical(space, degree: tuple) -> Echelon:
    """elements of the degree block killed by every iterated skew derivation"""
    radical = Echelon()
    if total_degree(degree) <= 1:
        return radical
    block = wd.words_of_degree(degree)
    lower = {}
    for letter in range(1, space.n + 1):
        if degree[letter - 1]:
            lower[letter] = pairing_radical(space, subtract_degrees(degree, space.letter_degree(letter)))
    images = []
    for word in block:
        image = {}
        monomial = FreeElement._trusted(space, {word: space.one()})
        for letter, below in lower.items():
            residual, _ = below.reduce(skew_derivation(letter, monomial).terms)
            for key, c in residual.items():
                image[(letter, key)] = c
        images.append(image)
    for relation in nullspace(images, space.one()):
        radical.insert({block[index]: c for index, c in relation.items()})
    return radical


def vanishes_in_nichols(element: FreeElement) -> bool:
    """True when element maps to 0 in B(V)"""
    for degree, component in element.homogeneous_components().items():
        if total_degree(degree) == 0:
            return False
        if not pairing_radical(element.space, degree).contains(component.terms):
            return False
    return True


def jacobi_residual(u: FreeElement, v: FreeElement, w: FreeElement, flavor: str = STD,
                    product=free_product) -> FreeElement:
    """difference of the two sides of the braided Jacobi identity; always 0

    std: [[u,v],w] = [u,[v,w]] + p_vw^-1 [[u,w],v] + (p_wv - p_vw^-1) v [u,w]
    c:   [[u,v],w] = [u,[v,w]] + p_wv^-1 [[u,w],v] + (p_vw - p_wv^-1) [u,w] v
    """
    space = u.space
    if v.is_zero() or w.is_zero():
        return FreeElement.zero(space)
    dv, dw = v.degree(), w.degree()
    p_vw, p_wv = space.bicharacter(dv, dw), space.bicharacter(dw, dv)

    def br(x, y):
        return bracket(x, y, flavor, product)

    lhs = br(br(u, v), w)
    if flavor == STD:
        rhs = (br(u, br(v, w)) + br(br(u, w), v).scale(p_vw.inverse())
               + product(v, br(u, w)).scale(p_wv - p_vw.inverse()))
    elif flavor == C:
        rhs = (br(u, br(v, w)) + br(br(u, w), v).scale(p_wv.inverse())
               + product(br(u, w), v).scale(p_vw - p_wv.inverse()))
    else:
        raise ValueError(f'no braided Jacobi identity for flavor {flavor!r}')
    return lhs - rhs
