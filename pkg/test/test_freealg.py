# -*- coding: utf-8 -*-
"""Tests for freealg

Created on Sat Nov 01 2021

@author: Avery

"""
import itertools
import os
import unittest
from nichols_tools.algebra import freealg
from nichols_tools.algebra.braiding import BraidedSpace
from nichols_tools.algebra.freealg import FreeElement
from nichols_tools.algebra.scalar import CycScalar
from nichols_tools.exceptions import SpaceMismatchError

PERFORM_SLOW_TESTS = os.environ.get('NICHOLS_SLOW_TESTS', '') == '1'


class TestFreeAlgebra(unittest.TestCase):
    """class for testing T(V), brackets and skew derivations"""

    def setUp(self):
        self.space = BraidedSpace.from_strings([['z^2', '-z^2'], ['1', '-1']], 6)
        self.x1 = FreeElement.generator(self.space, 1)
        self.x2 = FreeElement.generator(self.space, 2)

    def test_product(self):
        """products concatenate words and add degrees"""
        product = self.x1 * self.x2 * self.x1
        self.assertEqual({(1, 2, 1): self.space.one()}, product.terms)
        self.assertEqual((2, 1), product.degree())

    def test_bracket_flavors(self):
        """std yx - q_21 xy, minus xy - yx and c xy - q_12 yx"""
        q12, q21 = self.space.q[0][1], self.space.q[1][0]
        x1x2, x2x1 = self.x1 * self.x2, self.x2 * self.x1
        self.assertEqual(x2x1 - x1x2.scale(q21), freealg.bracket(self.x1, self.x2, freealg.STD))
        self.assertEqual(x1x2 - x2x1, freealg.bracket(self.x1, self.x2, freealg.MINUS))
        self.assertEqual(x1x2 - x2x1.scale(q12), freealg.bracket(self.x1, self.x2, freealg.C))
        with self.assertRaises(ValueError):
            freealg.bracket(self.x1, self.x2, 'other')

    def test_bracketing(self):
        """[12] is the bracket of its Shirshov parts"""
        self.assertEqual(freealg.bracket(self.x1, self.x2), freealg.bracketing(self.space, (1, 2)))
        expected = freealg.bracket(self.x1, freealg.bracket(self.x1, self.x2))
        self.assertEqual(expected, freealg.bracketing(self.space, (1, 1, 2)))
        self.assertEqual(self.x2, freealg.bracketing(self.space, (2,)))

    def test_adjoints(self):
        """l_x(y) = [x, y] and r_x(y) = [y, x]"""
        self.assertEqual(freealg.bracket(self.x1, self.x2), freealg.left_adjoint(self.x1, self.x2))
        self.assertEqual(freealg.bracket(self.x2, self.x1), freealg.right_adjoint(self.x1, self.x2))
        twice = freealg.bracket(self.x1, freealg.bracket(self.x1, self.x2))
        self.assertEqual(twice, freealg.left_adjoint(self.x1, self.x2, times=2))

    def test_skew_derivation(self):
        """<y_2, x_1 x_2> = q_21^-1 x_1 and <y_1, x_1 x_2> = x_2"""
        word = self.x1 * self.x2
        self.assertEqual(self.x2, freealg.skew_derivation(1, word))
        self.assertEqual(self.x1.scale(self.space.q[1][0].inverse()), freealg.skew_derivation(2, word))

    def test_jacobi_residual_vanishes(self):
        """the braided Jacobi identity holds in T(V) for both flavors"""
        w = self.x1 * self.x2 + self.x2 * self.x1
        for flavor in (freealg.STD, freealg.C):
            residual = freealg.jacobi_residual(self.x1, self.x2, w, flavor)
            self.assertTrue(residual.is_zero(), flavor)

    def test_rank_one_nichols(self):
        """x^2 vanishes in B(V) for q = -1 but not for q = 1"""
        fermion = BraidedSpace([[-1]], 2)
        x = FreeElement.generator(fermion, 1)
        self.assertTrue(freealg.vanishes_in_nichols(x * x))
        self.assertEqual(1, len(freealg.symmetrizer_kernel(fermion, (2,))))
        boson = BraidedSpace([[1]], 1)
        y = FreeElement.generator(boson, 1)
        self.assertFalse(freealg.vanishes_in_nichols(y * y))

    def test_space_mismatch(self):
        """elements over different spaces do not combine"""
        other = BraidedSpace([[-1]], 2)
        with self.assertRaises(SpaceMismatchError):
            self.x1 + FreeElement.generator(other, 1)


def blocks(n: int, max_total: int) -> list:
    """Z^n degrees of total degree 2..max_total"""
    return [degree for degree in itertools.product(range(max_total + 1), repeat=n)
            if 2 <= sum(degree) <= max_total]


def pair_space(order: int, a: int, b: int) -> BraidedSpace:
    """q_11 = q_22 = z^a and q_12 q_21 = z^b"""
    z = CycScalar.zeta
    return BraidedSpace([[z(order, a), z(order, b)], [1, z(order, a)]], order)


def chain_space(order: int, a: int, b: int) -> BraidedSpace:
    """three letters with q_ii = z^a and z^b on the edges 1-2 and 2-3"""
    z = CycScalar.zeta
    return BraidedSpace([[z(order, a), z(order, b), 1], [1, z(order, a), z(order, b)], [1, 1, z(order, a)]], order)


class TestKernelCrossValidation(unittest.TestCase):
    """class for testing that the pairing radical and ker S agree block by block"""

    def assertSameKernel(self, space, max_total):
        for degree in blocks(space.n, max_total):
            radical = freealg.pairing_radical(space, degree)
            kernel = freealg.symmetrizer_kernel(space, degree)
            self.assertEqual(kernel.canonical_form(), radical.canonical_form(), (space.to_strings(), degree))

    def test_rank_one(self):
        """x^m is in both kernels exactly when (m)!_q = 0"""
        for order in range(2, 13):
            self.assertSameKernel(BraidedSpace([[CycScalar.zeta(order, 1)]], order), 6)

    def test_example50(self):
        self.assertSameKernel(BraidedSpace.from_strings([['z^2', '-z^2'], ['1', '-1']], 6), 5)

    def test_three_letters(self):
        """a fermionic chain with primitive fourth roots on its edges"""
        self.assertSameKernel(chain_space(4, 2, 1), 4)

    def test_pairs_all_orders(self):
        """every q_ii and edge product in R_M for M <= 12, through degree 6"""
        if not PERFORM_SLOW_TESTS:
            return
        for order in range(2, 13):
            for a in range(order):
                for b in range(order):
                    self.assertSameKernel(pair_space(order, a, b), 6)

    def test_chains_all_orders(self):
        """three letter chains for M <= 12, through degree 5"""
        if not PERFORM_SLOW_TESTS:
            return
        for order in range(2, 13):
            for a in range(order):
                for b in range(order):
                    self.assertSameKernel(chain_space(order, a, b), 5)


if __name__ == "__main__":
    unittest.main()
