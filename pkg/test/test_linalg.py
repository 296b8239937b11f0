# -*- coding: utf-8 -*-
"""Tests for linalg

Created on Sat Nov 01 2021

@author: Avery

"""
import unittest
from nichols_tools.algebra.linalg import Echelon, determinant, nullspace
from nichols_tools.algebra.scalar import CycScalar


def s(value, order=1):
    return CycScalar.from_rational(order, value)


class TestLinalg(unittest.TestCase):
    """class for testing sparse exact row reduction"""

    def test_insert_and_contains(self):
        """a dependent vector is reported with its expression in the labels"""
        echelon = Echelon()
        self.assertEqual((True, None), echelon.insert({'a': s(1), 'b': s(2)}, label=0))
        self.assertEqual((True, None), echelon.insert({'b': s(1)}, label=1))
        added, expression = echelon.insert({'a': s(3), 'b': s(1)}, label=2)
        self.assertFalse(added)
        self.assertEqual({0: s(3), 1: s(-5)}, expression)
        self.assertTrue(echelon.contains({'a': s(1)}))
        self.assertEqual(2, len(echelon))

    def test_nullspace(self):
        """v0 + v1 - v2 = 0 is the only relation"""
        vectors = [{'x': s(1)}, {'y': s(1)}, {'x': s(1), 'y': s(1)}]
        relations = nullspace(vectors, s(1))
        self.assertEqual([{2: s(1), 0: s(-1), 1: s(-1)}], relations)

    def test_canonical_form(self):
        """two spanning sets of the same plane agree"""
        first, second = Echelon(), Echelon()
        first.insert({'x': s(1), 'y': s(1)})
        first.insert({'y': s(1)})
        second.insert({'x': s(2)})
        second.insert({'x': s(1), 'y': s(3)})
        self.assertEqual(first.canonical_form(), second.canonical_form())

    def test_determinant(self):
        """rational and cyclotomic determinants"""
        self.assertEqual(s(-2), determinant([[s(1), s(2)], [s(3), s(4)]], s(1)))
        self.assertTrue(determinant([[s(1), s(2)], [s(2), s(4)]], s(1)).is_zero())
        z = CycScalar.zeta(3, 1)
        one = CycScalar.one(3)
        self.assertEqual(one - z * z, determinant([[one, z], [z, one]], one))

    def test_determinant_triangular_and_swapped(self):
        """a triangular determinant is the diagonal product; a row swap flips the sign"""
        z = CycScalar.zeta(5, 1)
        one, zero = CycScalar.one(5), CycScalar.zero(5)
        rows = [[z, one, z * z], [zero, z * z, one], [zero, zero, z * z * z]]
        self.assertEqual(z ** 6, determinant(rows, one))
        self.assertEqual(-(z ** 6), determinant([rows[1], rows[0], rows[2]], one))
        self.assertEqual(one, determinant([], one))

    def test_determinant_mixed_orders(self):
        """entries of different orders are read in the lcm field"""
        z = CycScalar.zeta(3, 1)
        minus_one = CycScalar.from_rational(2, -1)
        result = determinant([[z, CycScalar.zero(3)], [CycScalar.zero(3), minus_one]], CycScalar.one(3))
        self.assertEqual(6, result.order)
        self.assertEqual(CycScalar.zeta(6, 5), result)


if __name__ == "__main__":
    unittest.main()
