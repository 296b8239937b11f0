# -*- coding: utf-8 -*-
"""Sparse exact row reduction

Vectors are dicts mapping comparable keys (words, or (letter, word) pairs) to
CycScalar coefficients with no stored zeros. Rows are reduced in insertion order
and each row is normalized so its pivot coefficient is 1.

"""
import logging
import math
from sympy import symbols
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from nichols_tools.algebra.scalar import CycScalar

logger = logging.getLogger(__name__)

_POLYNOMIALS = QQ[symbols('z')]


def add_scaled(target: dict, coeff, source: dict) -> dict:
    """target += coeff * source, in place"""
    for key, value in source.items():
        total = target.get(key)
        term = value * coeff
        total = term if total is None else total + term
        if total.is_zero():
            target.pop(key, None)
        else:
            target[key] = total
    return target


def scaled(source: dict, coeff) -> dict:
    if coeff.is_zero():
        return {}
    if coeff.is_one():
        return dict(source)
    return {key: value * coeff for key, value in source.items()}


class Echelon:
    """Incremental echelon basis of a subspace

    Each row remembers how it was built from the labelled vectors inserted so far,
    so a dependent vector can be written back in terms of those labels.
    """

    def __init__(self):
        self.rows = []
        self._pivot_rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vector: dict) -> tuple:
        """(residual, expression) with vector - residual = sum expression[label] * vector(label)"""
        residual = dict(vector)
        expression = {}
        for pivot, row, combo in self.rows:
            coeff = residual.get(pivot)
            if coeff is None:
                continue
            add_scaled(residual, -coeff, row)
            add_scaled(expression, coeff, combo)
        return residual, expression

    def insert(self, vector: dict, label=None) -> tuple:
        """add vector; returns (True, None) when it was new, else (False, expression)"""
        residual, expression = self.reduce(vector)
        if not residual:
            return False, expression
        pivot = min(residual)
        inverse = residual[pivot].inverse()
        row = scaled(residual, inverse)
        combo = {}
        if label is not None:
            combo[label] = inverse
            add_scaled(combo, -inverse, expression)
        self.rows.append((pivot, row, combo))
        self._pivot_rows[pivot] = len(self.rows) - 1
        return True, None

    def contains(self, vector: dict) -> bool:
        residual, _ = self.reduce(vector)
        return not residual

    def basis(self) -> list:
        return [row for _, row, _ in self.rows]

    def canonical_form(self) -> tuple:
        """reduced row echelon form, usable to compare subspaces for equality"""
        rows = [(pivot, dict(row)) for pivot, row, _ in self.rows]
        for i, (pivot, row) in enumerate(rows):
            for j, (_, other) in enumerate(rows):
                if i != j and pivot in other:
                    add_scaled(other, -other[pivot], row)
        return tuple(sorted((pivot, tuple(sorted((key, value.coeffs) for key, value in row.items())))
                            for pivot, row in rows))


def nullspace(vectors: list, one) -> list:
    """basis of {c : sum c_k vectors[k] = 0} as dicts index -> coefficient; one is the field unit"""
    echelon = Echelon()
    result = []
    for index, vector in enumerate(vectors):
        added, expression = echelon.insert(vector, label=index)
        if not added:
            relation = {index: one}
            add_scaled(relation, -one, expression)
            result.append(relation)
    return result


def determinant(rows: list, one):
    """exact determinant; one is the field unit

    Entries are lifted to Q[z], the determinant is taken fraction-free there and
    reduced modulo the cyclotomic polynomial, which commutes with the lift.
    """
    size = len(rows)
    if not size:
        return one
    order = math.lcm(one.order, *(entry.order for row in rows for entry in row))
    ring = _POLYNOMIALS.ring
    lifted = [[ring.from_dict({(k,): c for k, c in enumerate(entry.embed(order).coeffs) if c}) for entry in row]
              for row in rows]
    value = DomainMatrix(lifted, (size, size), _POLYNOMIALS).det()
    return CycScalar(order, reversed(value.to_dense()))
