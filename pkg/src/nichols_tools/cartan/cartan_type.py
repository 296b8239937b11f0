# -*- coding: utf-8 -*-
"""Finite-type recognition and positive roots for integer Cartan matrices

Matrices follow the convention q_ij q_ji = q_ii^(a_ij), so a_ij = 2(a_i, a_j)/(a_i, a_i)
and a short node i next to a long node j has a_ij < -1.

"""
import logging
from collections import deque
from fractions import Fraction
from itertools import permutations
import numpy as np
from sympy import Matrix, Rational
from sympy.liealgebras.cartan_type import CartanType
from nichols_tools.exceptions import NotFiniteTypeError

logger = logging.getLogger(__name__)

#no finite root system of rank <= 8 has more positive roots than E8
MAX_POSITIVE_ROOTS = 120


def as_matrix(matrix) -> np.ndarray:
    array = np.array(matrix, dtype=np.int64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ValueError(f'Cartan matrix must be square, got shape {array.shape}')
    return array


def components(matrix) -> list:
    """connected components of the Dynkin graph as sorted lists of 0-based nodes"""
    a = as_matrix(matrix)
    n = a.shape[0]
    seen = set()
    result = []
    for start in range(n):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        part = []
        while stack:
            i = stack.pop()
            part.append(i)
            for j in range(n):
                if j not in seen and (a[i, j] or a[j, i]):
                    seen.add(j)
                    stack.append(j)
        result.append(sorted(part))
    return result


def symmetrizer(matrix):
    """positive d with d_i a_ij = d_j a_ji, smallest entry 1 per component, or None"""
    a = as_matrix(matrix)
    n = a.shape[0]
    d = [None] * n
    for part in components(a):
        d[part[0]] = Fraction(1)
        queue = deque([part[0]])
        while queue:
            i = queue.popleft()
            for j in part:
                if i == j or not a[i, j]:
                    continue
                if not a[j, i]:
                    return None
                value = d[i] * int(a[i, j]) / int(a[j, i])
                if value <= 0:
                    return None
                if d[j] is None:
                    d[j] = value
                    queue.append(j)
                elif d[j] != value:
                    return None
        smallest = min(d[i] for i in part)
        for i in part:
            d[i] = d[i] / smallest
    return d


def is_finite_type(matrix) -> bool:
    """symmetrizable with a positive definite symmetrized form"""
    a = as_matrix(matrix)
    n = a.shape[0]
    if any(a[i, i] != 2 for i in range(n)):
        return False
    if any(a[i, j] > 0 for i in range(n) for j in range(n) if i != j):
        return False
    d = symmetrizer(a)
    if d is None:
        return False
    form = Matrix(n, n, lambda i, j: Rational(d[i].numerator, d[i].denominator) * int(a[i, j]))
    return bool(form.is_positive_definite)


def positive_roots(matrix) -> list:
    """positive roots in simple-root coordinates, by simple reflections from the simple roots"""
    a = as_matrix(matrix)
    if not is_finite_type(a):
        raise NotFiniteTypeError(f'Cartan matrix {a.tolist()} is not of finite type')
    n = a.shape[0]
    identity = np.eye(n, dtype=np.int64)
    found = {tuple(int(x) for x in identity[i]) for i in range(n)}
    queue = deque(identity[i] for i in range(n))
    while queue:
        beta = queue.popleft()
        pairing = a @ beta
        for i in range(n):
            image = beta - pairing[i] * identity[i]
            if image.min() < 0:
                continue
            key = tuple(int(x) for x in image)
            if key not in found:
                found.add(key)
                queue.append(image)
                if len(found) > MAX_POSITIVE_ROOTS:
                    raise NotFiniteTypeError('reflection orbit does not close')
    return sorted(found, key=lambda root: (sum(root), tuple(-x for x in root)))


def _component_tag(a: np.ndarray, part: list) -> str:
    rank = len(part)
    if rank == 1:
        return 'A1'
    sub = a[np.ix_(part, part)]
    bond = max(int(sub[i, j]) * int(sub[j, i]) for i in range(rank) for j in range(rank) if i != j)
    if bond == 3:
        return 'G2'
    if bond == 2:
        if rank == 2:
            return 'B2'
        d = symmetrizer(sub)
        short = sum(1 for value in d if value == 1)
        if rank == 4 and short == 2:
            return 'F4'
        return f'B{rank}' if short == 1 else f'C{rank}'
    neighbours = [[j for j in range(rank) if j != i and sub[i, j]] for i in range(rank)]
    branch = [i for i in range(rank) if len(neighbours[i]) == 3]
    if not branch:
        return f'A{rank}'
    arms = sorted(_arm_length(neighbours, branch[0], start) for start in neighbours[branch[0]])
    if arms[0] == 1 and arms[1] == 1:
        return f'D{rank}'
    return f'E{rank}'


def _arm_length(neighbours: list, centre: int, start: int) -> int:
    length = 0
    previous, node = centre, start
    while node is not None:
        length += 1
        following = [j for j in neighbours[node] if j != previous]
        previous, node = node, (following[0] if following else None)
    return length


def classify(matrix) -> str:
    """type tag such as 'A2', 'G2' or 'A2+A1', components in node order"""
    a = as_matrix(matrix)
    if not is_finite_type(a):
        raise NotFiniteTypeError(f'Cartan matrix {a.tolist()} is not of finite type')
    return '+'.join(_component_tag(a, part) for part in components(a))


def classical_root_count(tag: str) -> int:
    """number of positive roots of a (possibly reducible) type tag, from sympy's root tables"""
    return sum(len(CartanType(part).positive_roots()) for part in tag.split('+'))


#standard simple roots in orthonormal coordinates
def epsilon_simple_roots(tag: str) -> list:
    series, rank = tag[0], int(tag[1:])

    def unit(i, scale=1):
        vector = [Rational(0)] * rank
        vector[i] = Rational(scale)
        return vector

    def difference(i):
        vector = unit(i)
        vector[i + 1] = Rational(-1)
        return vector

    if series == 'B':
        return [difference(i) for i in range(rank - 1)] + [unit(rank - 1)]
    if series == 'C':
        return [difference(i) for i in range(rank - 1)] + [unit(rank - 1, 2)]
    if series == 'F' and rank == 4:
        half = Rational(1, 2)
        return [difference(1), difference(2), unit(3), [half, -half, -half, -half]]
    raise ValueError(f'no orthonormal model for type {tag}')


def _cartan_from_roots(roots: list) -> list:
    def dot(x, y):
        return sum(a * b for a, b in zip(x, y))
    return [[int(2 * dot(ri, rj) / dot(ri, ri)) for rj in roots] for ri in roots]


def node_permutation(matrix, tag: str) -> tuple:
    """perm with matrix[perm[i]][perm[j]] equal to the standard matrix of tag at (i, j)"""
    a = as_matrix(matrix)
    standard = _cartan_from_roots(epsilon_simple_roots(tag))
    rank = len(standard)
    for perm in permutations(range(a.shape[0]), rank):
        if all(a[perm[i], perm[j]] == standard[i][j] for i in range(rank) for j in range(rank)):
            return perm
    raise ValueError(f'matrix {a.tolist()} is not of type {tag}')


def epsilon_to_simple(tag: str, vector) -> tuple:
    """coordinates of an orthonormal-basis vector in the standard simple roots of tag"""
    basis = Matrix(epsilon_simple_roots(tag)).T
    solution = basis.LUsolve(Matrix([Rational(x) for x in vector]))
    return tuple(int(x) for x in solution)
