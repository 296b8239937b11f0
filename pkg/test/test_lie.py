# -*- coding: utf-8 -*-
"""Tests for closure, identities and theorems

Created on Sat Nov 01 2021

@author: Avery

"""
import os
import unittest
from nichols_tools.algebra import freealg
from nichols_tools.algebra.braiding import BraidedSpace
from nichols_tools.algebra.scalar import CycScalar
from nichols_tools.lie import identities, theorems
from nichols_tools.lie.closure import lie_closure, lie_closures, powers_in_span
from nichols_tools.nichols.basis import build_basis
from nichols_tools.nichols.superletters import SuperLetterAnalysis

PERFORM_SLOW_TESTS = os.environ.get('NICHOLS_SLOW_TESTS', '') == '1'


def example50_space() -> BraidedSpace:
    return BraidedSpace.from_strings([['z^2', '-z^2'], ['1', '-1']], 6)


class TestClosure(unittest.TestCase):
    """class for testing the Lie closures of V inside B(V)"""

    def test_rank_one(self):
        """L(V) is spanned by the powers x, ..., x^(N-1)"""
        for order in (2, 3, 5):
            basis = build_basis(BraidedSpace.from_strings([['z']], order), order + 1)
            span = lie_closure(basis)
            self.assertTrue(span.stabilized)
            self.assertEqual(order - 1, span.dimension())
            self.assertEqual(list(range(1, order)), powers_in_span(span, basis.generator(1), order - 1))

    def test_rank_one_bound(self):
        """heights alone bound L(V) for one letter: h - 1 = N - 1, which is tight"""
        for order in (3, 5):
            basis = build_basis(BraidedSpace.from_strings([['z']], order), order + 1)
            result = theorems.bound_L(SuperLetterAnalysis(basis), lie_closure(basis))
            self.assertEqual('pass', result.status)
            self.assertEqual(order - 1, result.details['bound'])
            self.assertEqual(0, result.details['edge_count'])

    def test_truncated_label(self):
        """a closure cut by the cutoff only reports a lower bound"""
        basis = build_basis(BraidedSpace.from_strings([['z']], 5), 3)
        span = lie_closure(basis)
        self.assertFalse(span.stabilized)
        self.assertEqual('>= 3 at cutoff 3', span.dimension_label())

    def test_unknown_flavor(self):
        """only std, minus and c are brackets"""
        basis = build_basis(BraidedSpace.from_strings([['z']], 3), 4)
        with self.assertRaises(ValueError):
            lie_closure(basis, 'other')


class TestExample50Lie(unittest.TestCase):
    """class for testing L(V) of the rank two example with dim B(V) = 36"""

    @classmethod
    def setUpClass(cls):
        cls.basis = build_basis(example50_space(), 12)
        cls.analysis = SuperLetterAnalysis(cls.basis)
        cls.spans = lie_closures(cls.basis)
        cls.span = cls.spans[freealg.STD]

    def test_dimension(self):
        """dim L(V) = 35 = dim B(V) - 1"""
        self.assertTrue(self.span.stabilized)
        self.assertEqual(35, self.span.dimension())
        self.assertEqual({'holds': True, 'witness': None, 'obstruction': None, 'reason': ''},
                         theorems.direct_sum_check(self.basis, self.span))

    def test_flavors_agree(self):
        """std and c closures have the same dimension in every degree"""
        self.assertEqual(self.span.dimension(), self.spans[freealg.C].dimension())
        self.assertEqual('pass', theorems.flavor_equivalence_check(self.spans).status)

    def test_bound(self):
        """sum of (h_u - 1) plus E_e' is 12"""
        result = theorems.bound_L(self.analysis, self.span)
        self.assertEqual('pass', result.status)
        self.assertEqual(12, result.details['bound'])
        self.assertEqual(6, result.details['edge_count'])

    def test_membership(self):
        """powers of hard letters below their height lie in L(V)"""
        self.assertEqual('pass', theorems.check_powers_in_L(self.analysis, self.span).status)
        self.assertEqual('pass', theorems.lemma7_check(self.analysis, self.span).status)

    def test_finiteness(self):
        """B(V) and L(V) are both finite and no infinity certificate exists"""
        certificates = theorems.infinity_certificates(self.analysis, self.span)
        self.assertEqual([], certificates)
        self.assertEqual('pass', theorems.thm9_check(self.analysis, self.span, certificates).status)
        self.assertEqual('pass', theorems.thm51_check(self.analysis, self.span, certificates).status)

    def test_not_cartan(self):
        """the Cartan equivalence does not apply"""
        self.assertEqual('skipped', theorems.cartan_equivalence_check(self.analysis, self.span).status)
        self.assertEqual('skipped', theorems.cor22_check(self.analysis, self.span).status)


class TestDirectSum(unittest.TestCase):
    """class for testing the obstruction to B(V) = F + L(V)"""

    def test_edge_free_pair(self):
        """two points with q_12 q_21 = 1: dim B(V) = 9 and the direct sum fails at 12"""
        space = BraidedSpace.from_strings([['z', '1'], ['1', 'z']], 3)
        basis = build_basis(space, 5)
        span = lie_closure(basis)
        self.assertEqual(9, basis.dimension())
        self.assertEqual(4, span.dimension())
        result = theorems.direct_sum_check(basis, span)
        self.assertFalse(result['holds'])
        self.assertEqual('12', result['witness'])
        self.assertEqual('pass', theorems.lemma10_check(basis, span).status)


class TestIdentities(unittest.TestCase):
    """class for testing identities in the free algebra"""

    def test_jacobi(self):
        """random triples satisfy the braided Jacobi identity"""
        result = identities.jacobi_suite(example50_space(), samples=20, seed=1)
        self.assertEqual('pass', result.status)

    def test_prop21_identities(self):
        """Eq. (5) and the determinant of B^(0) for p_uu = z^2, p_uv p_vu = -z^2"""
        z2 = CycScalar.from_string('z^2', 6)
        space = identities.pair_space(6, z2, -z2, 1, -1)
        for k in (1, 2, 3):
            self.assertEqual('pass', identities.prop21_identities(space, k).status, k)

    def test_prop21_precondition(self):
        """p_uu^i p_uv p_vu = 1 for some small i skips the identity"""
        z = CycScalar.zeta(3, 1)
        space = identities.pair_space(3, z, z, 1, z)
        self.assertFalse(identities.prop21_precondition(z, z, 2))
        self.assertEqual('skipped', identities.prop21_identities(space, 2).status)

    def test_b0_determinant_k1(self):
        """det B^(0) = 1 - p_uv p_vu for k = 1"""
        z = CycScalar.zeta(5, 1)
        product = z ** 2
        self.assertEqual(1 - product, identities.b0_determinant_formula(z, product, 1))

    def test_eq7(self):
        """p_uu = 1 and p_uv p_vu = 1 make every mixed adjoint a multiple of l^k v"""
        result = identities.eq7_check(CycScalar.zeta(3, 1), CycScalar.zeta(3, 2), max_k=3)
        self.assertEqual('pass', result.status)

    def test_lemma14_grid(self):
        """derivation formulas and vanishing conditions over M = 3"""
        self.assertEqual('pass', identities.lemma14_grid(orders=(3,), max_k=3).status)

    def test_lemma14_grid_all_orders(self):
        """every q_ii and edge product in R_M for M <= 12 and k <= 4"""
        if not PERFORM_SLOW_TESTS:
            return
        result = identities.lemma14_grid(orders=range(1, 13), max_k=4)
        self.assertEqual('pass', result.status)
        self.assertEqual(4 * sum(order * order for order in range(1, 13)), result.details['cases'])

    def test_lemma11_identity(self):
        """l_[u]^k [u] is a multiple of [u]^(k+1)"""
        space = example50_space()
        for u in ((1,), (1, 2), (1, 1, 2)):
            self.assertTrue(identities.lemma11_identity(space, u, 2), u)


if __name__ == "__main__":
    unittest.main()
