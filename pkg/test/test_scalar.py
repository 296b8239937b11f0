# -*- coding: utf-8 -*-
"""Tests for scalar

Created on Sat Nov 01 2021

@author: Avery

"""
import unittest
from fractions import Fraction
from nichols_tools.algebra.scalar import (CycScalar, NOT_ROOT_OF_UNITY, cyclotomic_modulus, is_primitive_root,
                                          q_factorial, q_int)
from nichols_tools.exceptions import ScalarDivisionError, ScalarParseError


class TestCycScalar(unittest.TestCase):
    """class for testing exact cyclotomic arithmetic"""

    def test_cyclotomic_modulus(self):
        """Phi_6 = x^2 - x + 1 and Phi_4 = x^2 + 1"""
        self.assertEqual((1, -1, 1), cyclotomic_modulus(6))
        self.assertEqual((1, 0, 1), cyclotomic_modulus(4))

    def test_zeta_reduces(self):
        """zeta_6^3 = -1 and zeta_6^6 = 1"""
        self.assertEqual(CycScalar.from_rational(6, -1), CycScalar.zeta(6, 3))
        self.assertTrue(CycScalar.zeta(6, 6).is_one())
        self.assertEqual(CycScalar.zeta(6, 5), CycScalar.zeta(6, -1))

    def test_parse(self):
        """expressions in z parse to the same value as built by hand"""
        z = CycScalar.zeta(12, 1)
        self.assertEqual(z ** 4 + z, CycScalar.from_string('z^4 + z', 12))
        self.assertEqual(-(z ** 2), CycScalar.from_string('-z^2', 12))
        self.assertEqual(CycScalar.from_rational(12, Fraction(3, 2)) * z, CycScalar.from_string('3/2*z', 12))
        self.assertTrue(CycScalar.from_string(' 1 ', 5).is_one())

    def test_parse_error_column(self):
        """a dangling exponent is reported at the column after the caret"""
        with self.assertRaises(ScalarParseError) as context:
            CycScalar.from_string('z^', 6)
        self.assertEqual(3, context.exception.column)
        with self.assertRaises(ScalarParseError):
            CycScalar.from_string('', 6)
        with self.assertRaises(ScalarParseError):
            CycScalar.from_string('z z', 6)

    def test_str_round_trip(self):
        """printed values parse back to themselves"""
        for text in ('z^2', '-z^2', '1', '-1', 'z + 1', '0'):
            value = CycScalar.from_string(text, 6)
            self.assertEqual(value, CycScalar.from_string(str(value), 6))

    def test_inverse(self):
        """x * x^-1 = 1, and 0 has no inverse"""
        value = CycScalar.from_string('z^2 + 3', 7)
        self.assertTrue((value * value.inverse()).is_one())
        with self.assertRaises(ScalarDivisionError):
            CycScalar.zero(7).inverse()

    def test_mult_order(self):
        """orders of roots of unity, and 2 which is none"""
        self.assertEqual(1, CycScalar.one(6).mult_order())
        self.assertEqual(2, CycScalar.from_rational(6, -1).mult_order())
        self.assertEqual(3, CycScalar.zeta(6, 2).mult_order())
        self.assertEqual(6, CycScalar.from_string('-z^2', 6).mult_order())
        self.assertEqual(NOT_ROOT_OF_UNITY, CycScalar.from_rational(6, 2).mult_order())

    def test_embed(self):
        """zeta_3 embeds as zeta_6^2 and mixed orders compare in the lcm field"""
        self.assertEqual(CycScalar.zeta(6, 2), CycScalar.zeta(3, 1).embed(6))
        self.assertEqual(CycScalar.zeta(6, 2), CycScalar.zeta(3, 1))
        with self.assertRaises(ValueError):
            CycScalar.zeta(4, 1).embed(6)

    def test_q_numbers(self):
        """(N)_q = 0 for q in R_N, and (k)_q! != 0 below N"""
        q = CycScalar.zeta(5, 1)
        self.assertTrue(q_int(5, q).is_zero())
        self.assertFalse(q_factorial(4, q).is_zero())
        self.assertTrue(q_factorial(5, q).is_zero())
        self.assertTrue(q_factorial(0, q).is_one())
        self.assertEqual(CycScalar.from_rational(5, 3), q_int(3, CycScalar.one(5)))

    def test_is_primitive_root(self):
        """-z^2 is a primitive 6th root of unity, z^2 is not"""
        self.assertTrue(is_primitive_root(CycScalar.from_string('-z^2', 6), 6))
        self.assertFalse(is_primitive_root(CycScalar.zeta(6, 2), 6))

    def test_immutable(self):
        """values cannot be changed after construction"""
        with self.assertRaises(AttributeError):
            CycScalar.one(3).order = 6


if __name__ == "__main__":
    unittest.main()
