# -*- coding: utf-8 -*-
"""Hard super-letters, heights, the root system and the PBW census

A super-letter [u] is hard when its normal form is not a combination of products
of super-letters [l] with l > u of the same total Z^n degree. Such products are
spanned by products of hard letters, so spans are built from hard letters only,
deciding Lyndon words by increasing degree and decreasing lex order inside a
degree.

"""
import logging
import math
from dataclasses import dataclass
import numpy as np
from nichols_tools.algebra import freealg
from nichols_tools.algebra import words as wd
from nichols_tools.algebra.braiding import is_nonnegative, subtract_degrees, total_degree
from nichols_tools.algebra.freealg import FreeElement
from nichols_tools.algebra.linalg import Echelon
from nichols_tools.algebra.scalar import CycScalar, NOT_ROOT_OF_UNITY
from nichols_tools.exceptions import UnknownHeightError
from nichols_tools.nichols.basis import NicholsBasis

logger = logging.getLogger(__name__)

#height flags
ORDER_INFINITE = 'order-infinite'
M_INFINITY = 'm-infinity'
TRIVIAL_SELF_BRAIDING = 'trivial-self-braiding'


@dataclass
class SuperLetterRecord:
    """PBW datum of a Lyndon word u

    height is an int, math.inf, or None when unknown at the cutoff.
    """
    word: tuple
    degree: tuple
    value: FreeElement
    hard: bool
    p_uu: CycScalar
    ord_puu: object
    height: object = None
    height_flag: str = None

    @property
    def length(self) -> int:
        return len(self.word)

    def label(self, n: int = 9) -> str:
        return wd.format_word(self.word, n)


class SuperLetterAnalysis:
    """Super-letter data of a computed NicholsBasis

    Parameters
    ----------
    basis : NicholsBasis
    prune : bool
        skip Lyndon words whose Shirshov parts are not both hard
    """

    def __init__(self, basis: NicholsBasis, prune: bool = True):
        self.basis = basis
        self.space = basis.space
        self.prune = prune
        self._values = {}
        self._minus_values = {}
        self._hard = {}
        self._records = None
        self._span_memo = {}

    #values
    def value(self, u) -> FreeElement:
        """normal form of [u] in B(V)"""
        u = tuple(u)
        cached = self._values.get(u)
        if cached is not None:
            return cached
        if len(u) == 1:
            result = self.basis.generator(u[0])
        else:
            v, w = wd.shirshov_decomposition(u)
            result = self.basis.bracket(self.value(v), self.value(w), freealg.STD)
        self._values[u] = result
        return result

    def minus_value(self, u) -> FreeElement:
        """normal form of [u]^- in B(V)"""
        u = tuple(u)
        cached = self._minus_values.get(u)
        if cached is not None:
            return cached
        if len(u) == 1:
            result = self.basis.generator(u[0])
        else:
            v, w = wd.shirshov_decomposition(u)
            result = self.basis.bracket(self.minus_value(w), self.minus_value(v), freealg.MINUS)
        self._minus_values[u] = result
        return result

    def p(self, u, v) -> CycScalar:
        """p_uv = chi(deg u, deg v)"""
        return self.space.bicharacter(self.space.word_degree(u), self.space.word_degree(v))

    #hardness
    def _greater_span(self, u: tuple, degree: tuple, hard: list) -> Echelon:
        """span of products of hard letters > u with total degree `degree`"""
        key = (u, degree)
        cached = self._span_memo.get(key)
        if cached is not None:
            return cached
        span = Echelon()
        if not any(degree):
            span.insert({(): self.space.one()})
        else:
            full = self.basis.block_dimension(degree)
            for letter in hard:
                if len(span) == full:
                    break
                if letter <= u:
                    continue
                rest = subtract_degrees(degree, self.space.word_degree(letter))
                if not is_nonnegative(rest) or self.basis.vanishes_at(total_degree(rest)):
                    continue
                below = self._greater_span(u, rest, hard)
                for row in below.basis():
                    product = self.basis.product(self.value(letter), FreeElement._trusted(self.space, row))
                    if product.terms:
                        span.insert(product.terms)
        self._span_memo[key] = span
        return span

    def greater_span(self, u, degree) -> Echelon:
        self.hard_letters()
        return self._greater_span(tuple(u), tuple(degree), self._hard_words)

    def is_hard(self, u) -> bool:
        u = tuple(u)
        if len(u) > self.basis.top_degree():
            self.basis.check_total(len(u))
            return False
        self.hard_letters()
        return self._hard.get(u, False)

    def _decide(self, u: tuple, hard: list) -> bool:
        if self.prune and len(u) > 1:
            v, w = wd.shirshov_decomposition(u)
            if not (self._hard.get(v) and self._hard.get(w)):
                logger.debug('%s pruned: a Shirshov part is not hard', wd.format_word(u, self.space.n))
                return False
        value = self.value(u)
        if value.is_zero():
            return False
        span = self._greater_span(u, self.space.word_degree(u), hard)
        return not span.contains(value.terms)

    def hard_letters(self) -> list:
        """records of D, the hard super-letters of degree up to the computed top degree, in lex order"""
        if self._records is not None:
            return self._records
        n = self.space.n
        top = self.basis.top_degree()
        by_degree = wd.lyndon_words_by_degree(n, top)
        hard = []
        for degree in sorted(by_degree, key=lambda d: (total_degree(d), d)):
            nonzero = self.basis.block_dimension(degree) > 0
            for u in reversed(by_degree[degree]):
                decision = nonzero and self._decide(u, hard)
                self._hard[u] = decision
                if decision:
                    hard.append(u)
                    hard.sort()
                    logger.debug('hard super-letter %s', wd.format_word(u, n))
            self._span_memo.clear()
        self._hard_words = hard
        self._records = [self._record(u) for u in hard]
        logger.info('found %d hard super-letters through degree %d', len(hard), top)
        return self._records

    def hard_words(self) -> list:
        return [record.word for record in self.hard_letters()]

    def record(self, u) -> SuperLetterRecord:
        u = tuple(u)
        for record in self.hard_letters():
            if record.word == u:
                return record
        return self._record(u)

    def _record(self, u: tuple) -> SuperLetterRecord:
        degree = self.space.word_degree(u)
        p_uu = self.space.bicharacter(degree, degree)
        order = p_uu.mult_order()
        hard = self._hard.get(u, False)
        record = SuperLetterRecord(u, degree, self.value(u), hard, p_uu, order)
        if hard:
            record.height, record.height_flag = self._height(u, order)
        return record

    #heights
    def _power_in_span(self, u: tuple, exponent: int) -> bool:
        total = exponent * len(u)
        if self.basis.vanishes_at(total):
            return True
        power = self.basis.power(self.value(u), exponent)
        degree = tuple(exponent * d for d in self.space.word_degree(u))
        span = self._greater_span(u, degree, self._hard_words)
        return span.contains(power.terms)

    def _height(self, u: tuple, order) -> tuple:
        if order == NOT_ROOT_OF_UNITY:
            return math.inf, ORDER_INFINITE
        if order > 1:
            total = order * len(u)
            if self.basis.vanishes_at(total):
                return order, None
            if not self.basis.is_computable(total):
                return None, None
            if self._power_in_span(u, order):
                return order, None
            return math.inf, M_INFINITY
        exponent = 2
        while self.basis.is_computable(exponent * len(u)):
            if self._power_in_span(u, exponent):
                return exponent, TRIVIAL_SELF_BRAIDING
            exponent += 1
        return math.inf, TRIVIAL_SELF_BRAIDING

    def height(self, u):
        return self.record(u).height

    def m_infinity_scan(self) -> list:
        """hard letters with 1 < ord(p_uu) < inf whose height test fails at ord(p_uu)"""
        return [record for record in self.hard_letters() if record.height_flag == M_INFINITY]

    def unknown_heights(self) -> list:
        return [record for record in self.hard_letters() if record.height is None]

    #root system
    def root_system(self) -> dict:
        """positive roots deg(D) and E_e', the count of unordered hard pairs with p_uv p_vu != 1"""
        records = self.hard_letters()
        roots = sorted({record.degree for record in records}, key=lambda d: (total_degree(d), d))
        edges = 0
        for i, first in enumerate(records):
            for second in records[i + 1:]:
                if not self.space.braiding_product(first.degree, second.degree).is_one():
                    edges += 1
        return {'roots': roots, 'edge_count': edges}

    def shirshov_violations(self) -> list:
        """hard words of length >= 2 with a Shirshov part that is not hard"""
        hard = set(self.hard_words())
        violations = []
        for u in sorted(hard):
            if len(u) > 1:
                v, w = wd.shirshov_decomposition(u)
                if v not in hard or w not in hard:
                    violations.append(u)
        return violations

    def letters_per_degree(self) -> dict:
        counts = {}
        for record in self.hard_letters():
            counts[record.degree] = counts.get(record.degree, 0) + 1
        return counts

    #PBW census
    def pbw_census(self) -> dict:
        """restricted monomial counts over D by Z^n degree and by total degree"""
        top = self.basis.top_degree()
        counts = {self.space.zero_degree(): 1}
        for record in self.hard_letters():
            cap = top // record.length
            if record.height is None:
                if record.ord_puu * record.length <= top:
                    raise UnknownHeightError(
                        f'height of {record.label(self.space.n)} is unknown at cutoff {self.basis.cutoff}')
                limit = cap
            elif record.height == math.inf:
                limit = cap
            else:
                limit = min(record.height - 1, cap)
            updated = {}
            for degree, count in counts.items():
                for k in range(limit + 1):
                    shifted = tuple(d + k * e for d, e in zip(degree, record.degree))
                    if total_degree(shifted) > top:
                        break
                    updated[shifted] = updated.get(shifted, 0) + count
            counts = updated
        totals = np.zeros(top + 1, dtype=np.int64)
        for degree, count in counts.items():
            totals[total_degree(degree)] += count
        return {
            'coefficients': [int(value) for value in totals],
            'blocks': {degree: count for degree, count in sorted(counts.items())},
            'dimension': int(totals.sum()) if self.basis.is_finite() else None,
        }
