# -*- coding: utf-8 -*-
"""Braided vector spaces of diagonal type

A BraidedSpace holds the braiding matrix (q_ij) of C(x_i (x) x_j) = q_ij x_j (x) x_i
and the bicharacter chi it induces on the degree lattice Z^n. Letters are 1-based,
degree vectors are plain tuples of ints.

"""
import logging
import math
from dataclasses import dataclass
import numpy as np
from nichols_tools.algebra.scalar import CycScalar, NOT_ROOT_OF_UNITY
from nichols_tools.cartan import cartan_type
from nichols_tools.exceptions import NotRootOfUnityError

logger = logging.getLogger(__name__)

#exponents tried for a_ij, largest first
CARTAN_EXPONENTS = (0, -1, -2, -3)


def unit_degree(n: int, letter: int) -> tuple:
    return tuple(1 if k == letter - 1 else 0 for k in range(n))


def add_degrees(alpha: tuple, beta: tuple) -> tuple:
    return tuple(a + b for a, b in zip(alpha, beta))


def scale_degree(alpha: tuple, factor: int) -> tuple:
    return tuple(factor * a for a in alpha)


def subtract_degrees(alpha: tuple, beta: tuple) -> tuple:
    return tuple(a - b for a, b in zip(alpha, beta))


def total_degree(alpha: tuple) -> int:
    return sum(alpha)


def is_nonnegative(alpha: tuple) -> bool:
    return all(a >= 0 for a in alpha)


@dataclass(frozen=True)
class DynkinData:
    """generalized Dynkin diagram: vertex labels q_ii, edges {i, j} labelled q_ij q_ji != 1"""
    vertex_labels: tuple
    edge_labels: dict

    @property
    def edge_count(self) -> int:
        return len(self.edge_labels)


class BraidedSpace:
    """Diagonal braiding matrix over Q(zeta_order)

    Parameters
    ----------
    q : n x n nested sequence of CycScalar, int or Fraction
        braiding matrix; entries are embedded into Q(zeta_order)
    order : int
        the cyclotomic order M of the coefficient field
    """

    def __init__(self, q, order: int):
        rows = [list(row) for row in q]
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError('braiding matrix must be square and nonempty')
        matrix = []
        for i, row in enumerate(rows):
            entries = []
            for j, value in enumerate(row):
                scalar = self._as_scalar(value, order)
                if scalar.is_zero():
                    raise ValueError(f'braiding entry q_{i + 1}{j + 1} is zero')
                entries.append(scalar)
            matrix.append(tuple(entries))
        self.n = n
        self.order = order
        self.q = tuple(matrix)
        self._chi_cache = {}

    @staticmethod
    def _as_scalar(value, order: int) -> CycScalar:
        if isinstance(value, CycScalar):
            return value.embed(order)
        return CycScalar.from_rational(order, value)

    @classmethod
    def from_strings(cls, rows, order: int):
        """build from scalar expressions in z such as [['z^2', '-z^2'], ['1', '-1']]"""
        return cls([[CycScalar.from_string(text, order) for text in row] for row in rows], order)

    def to_strings(self) -> list:
        return [[str(value) for value in row] for row in self.q]

    def __eq__(self, other):
        if not isinstance(other, BraidedSpace):
            return NotImplemented
        return self.order == other.order and self.q == other.q

    def __hash__(self):
        return hash((self.order, tuple(tuple(v.coeffs) for row in self.q for v in row)))

    def __repr__(self):
        return f'BraidedSpace(order={self.order}, q={self.to_strings()})'

    def scalar(self, value) -> CycScalar:
        return self._as_scalar(value, self.order)

    def one(self) -> CycScalar:
        return CycScalar.one(self.order)

    def zero(self) -> CycScalar:
        return CycScalar.zero(self.order)

    def letter_degree(self, letter: int) -> tuple:
        return unit_degree(self.n, letter)

    def word_degree(self, word) -> tuple:
        counts = [0] * self.n
        for letter in word:
            counts[letter - 1] += 1
        return tuple(counts)

    def zero_degree(self) -> tuple:
        return (0,) * self.n

    def bicharacter(self, alpha, beta) -> CycScalar:
        """chi(alpha, beta) = prod q_ij^(alpha_i beta_j)"""
        key = (tuple(alpha), tuple(beta))
        cached = self._chi_cache.get(key)
        if cached is not None:
            return cached
        value = self.one()
        for i, a in enumerate(alpha):
            if not a:
                continue
            for j, b in enumerate(beta):
                if b:
                    value = value * self.q[i][j] ** (a * b)
        self._chi_cache[key] = value
        return value

    def braiding_product(self, alpha, beta) -> CycScalar:
        """p_ab p_ba for degrees a and b"""
        return self.bicharacter(alpha, beta) * self.bicharacter(beta, alpha)

    def dynkin(self) -> DynkinData:
        edges = {}
        for i in range(self.n):
            for j in range(i + 1, self.n):
                product = self.q[i][j] * self.q[j][i]
                if not product.is_one():
                    edges[(i + 1, j + 1)] = product
        return DynkinData(tuple(self.q[i][i] for i in range(self.n)), edges)

    def connected_components(self) -> list:
        """components of the Dynkin graph as (letters, induced subspace) pairs"""
        edges = self.dynkin().edge_labels
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in edges:
            parent[find(i)] = find(j)
        groups = {}
        for letter in range(1, self.n + 1):
            groups.setdefault(find(letter), []).append(letter)
        parts = sorted(groups.values())
        return [(tuple(part), self.induced_subspace(part)) for part in parts]

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def induced_subspace(self, letters):
        letters = list(letters)
        return BraidedSpace([[self.q[i - 1][j - 1] for j in letters] for i in letters], self.order)

    def twist_symmetrize(self):
        """twist-equivalent space with q'_ij = q'_ji = sqrt(q_ij q_ji) and q'_ii = q_ii"""
        for row in self.q:
            for value in row:
                if value.mult_order() == NOT_ROOT_OF_UNITY:
                    raise NotRootOfUnityError(f'braiding entry {value} is not a root of unity')
        roots = {}
        order = self.order
        for i in range(self.n):
            for j in range(i + 1, self.n):
                root = (self.q[i][j] * self.q[j][i]).sqrt_root_of_unity()
                roots[(i, j)] = root
                order = math.lcm(order, root.order)
        matrix = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                if i == j:
                    row.append(self.q[i][i].embed(order))
                else:
                    row.append(roots[(min(i, j), max(i, j))].embed(order))
            matrix.append(row)
        logger.debug('twist symmetrized space lives in order %d', order)
        return BraidedSpace(matrix, order)

    def cartan_matrix(self):
        """integer matrix (a_ij) with q_ij q_ji = q_ii^a_ij, a_ij the largest exponent in CARTAN_EXPONENTS, or None"""
        a = np.full((self.n, self.n), 2, dtype=np.int64)
        for i in range(self.n):
            for j in range(self.n):
                if i == j:
                    continue
                product = self.q[i][j] * self.q[j][i]
                for exponent in CARTAN_EXPONENTS:
                    if (exponent == 0) == product.is_one() and self.q[i][i] ** exponent == product:
                        a[i, j] = exponent
                        break
                else:
                    return None
        return a

    def cartan_detect(self):
        """Cartan matrix of finite type, or None"""
        a = self.cartan_matrix()
        if a is None or not cartan_type.is_finite_type(a):
            return None
        return a
