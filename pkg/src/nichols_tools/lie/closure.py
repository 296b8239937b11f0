# -*- coding: utf-8 -*-
"""Braided Lie algebras generated by V inside B(V)

lie_closure grows the span of x_1..x_n under one bracket flavor. Each new basis
element is bracketed, in both orders, against every element found before it, so
every pair is visited once and the result is the fixed point of all-pairs
iteration.

"""
import logging
from dataclasses import dataclass
from nichols_tools.algebra import freealg
from nichols_tools.algebra.braiding import add_degrees, total_degree
from nichols_tools.algebra.freealg import FreeElement
from nichols_tools.algebra.linalg import Echelon
from nichols_tools.exceptions import CutoffExceededError
from nichols_tools.nichols.basis import NicholsBasis

logger = logging.getLogger(__name__)


@dataclass
class Generation:
    """how a basis element of the span was produced; left/right are None for generators"""
    index: int
    degree: tuple
    generation: int
    left: int = None
    right: int = None


class LieSpan:
    """closure of V under one bracket flavor, stored per Z^n degree"""

    def __init__(self, basis: NicholsBasis, flavor: str):
        self.basis = basis
        self.space = basis.space
        self.flavor = flavor
        self.blocks = {}
        self.elements = []
        self.log = []
        self.truncated = False
        self.stabilized = False

    def __len__(self):
        return len(self.elements)

    def dimension(self) -> int:
        return len(self.elements)

    def dimension_at(self, degree) -> int:
        block = self.blocks.get(tuple(degree))
        return len(block) if block is not None else 0

    def dimensions_by_total(self) -> list:
        totals = [0] * (self.basis.top_degree() + 1)
        for entry in self.log:
            totals[total_degree(entry.degree)] += 1
        return totals

    def dimension_label(self) -> str:
        """'d', or '>= d at cutoff c' for a truncated closure"""
        if self.stabilized:
            return str(self.dimension())
        return f'>= {self.dimension()} at cutoff {self.basis.cutoff}'

    def is_full(self, degree) -> bool:
        return self.dimension_at(degree) >= self.basis.block_dimension(degree)

    def add(self, element: FreeElement, left: int = None, right: int = None) -> bool:
        """insert a homogeneous normal form; returns whether the span grew"""
        if element.is_zero():
            return False
        degree = element.degree()
        block = self.blocks.setdefault(degree, Echelon())
        added, _ = block.insert(element.terms)
        if not added:
            return False
        if left is None:
            generation = 0
        else:
            generation = max(self.log[left].generation, self.log[right].generation) + 1
        self.log.append(Generation(len(self.elements), degree, generation, left, right))
        self.elements.append(element)
        return True

    def contains(self, element: FreeElement) -> bool:
        """whether the image of element in B(V) lies in the span"""
        reduced = self.basis.normal_form(element)
        for degree, component in reduced.homogeneous_components().items():
            if not any(degree):
                return False
            block = self.blocks.get(degree)
            if block is None or not block.contains(component.terms):
                return False
        return True

    def summary(self) -> dict:
        return {
            'flavor': self.flavor,
            'dimension': self.dimension(),
            'stabilized': self.stabilized,
            'label': self.dimension_label(),
            'by_total_degree': self.dimensions_by_total(),
        }


def lie_closure(basis: NicholsBasis, flavor: str = freealg.STD) -> LieSpan:
    """closure of V in B(V) under flavor, truncated at the basis cutoff"""
    if flavor not in freealg.FLAVORS:
        raise ValueError(f'unknown bracket flavor {flavor!r}')
    span = LieSpan(basis, flavor)
    for letter in range(1, basis.space.n + 1):
        span.add(basis.generator(letter))
    k = 0
    while k < len(span.elements):
        x, dx = span.elements[k], span.log[k].degree
        for j in range(k + 1):
            y, dy = span.elements[j], span.log[j].degree
            target = add_degrees(dx, dy)
            total = total_degree(target)
            if basis.vanishes_at(total):
                continue
            if total > basis.cutoff:
                span.truncated = True
                continue
            orders = ((k, j),) if j == k else ((k, j), (j, k))
            for left, right in orders:
                if span.is_full(target):
                    break
                value = basis.bracket(span.elements[left], span.elements[right], flavor)
                span.add(value, left, right)
        k += 1
    span.stabilized = not span.truncated
    if span.truncated:
        logger.warning('%s closure truncated at cutoff %d with %d elements', flavor, basis.cutoff, len(span))
    logger.info('%s closure: dimension %s', flavor, span.dimension_label())
    return span


def lie_closures(basis: NicholsBasis) -> dict:
    return {flavor: lie_closure(basis, flavor) for flavor in freealg.FLAVORS}


def powers_in_span(span: LieSpan, element: FreeElement, max_exponent: int) -> list:
    """exponents t <= max_exponent with element^t in the span, stopping at the cutoff"""
    found = []
    for t in range(1, max_exponent + 1):
        try:
            power = span.basis.power(element, t)
        except CutoffExceededError:
            break
        if span.contains(power):
            found.append(t)
    return found
