# -*- coding: utf-8 -*-
"""Tests for analysis

Created on Sat Nov 01 2021

@author: Avery

"""
import unittest
from nichols_tools.algebra.braiding import BraidedSpace
from nichols_tools.algebra.scalar import CycScalar
from nichols_tools.cartan import analysis as cartan
from nichols_tools.lie.closure import lie_closure
from nichols_tools.nichols.basis import build_basis
from nichols_tools.nichols.superletters import SuperLetterAnalysis


def a2_r3() -> BraidedSpace:
    return BraidedSpace.from_strings([['z', 'z^2'], ['1', 'z']], 3)


def b2_r3() -> BraidedSpace:
    return BraidedSpace.from_strings([['z', 'z'], ['1', 'z^2']], 3)


class TestCartanDatum(unittest.TestCase):
    """class for testing Cartan data read off a braiding matrix"""

    def test_a2(self):
        """A2 with three positive roots and N = 3"""
        datum = cartan.cartan_datum(a2_r3())
        self.assertEqual('A2', datum.tag)
        self.assertEqual([(1, 0), (0, 1), (1, 1)], datum.roots)
        self.assertEqual(3, datum.order)
        self.assertTrue(datum.simply_laced_or_g2)
        self.assertEqual(2, datum.form((1, 1), (1, 1)))
        self.assertEqual(-1, datum.form((1, 0), (0, 1)))

    def test_b2(self):
        """B2 with its short node first"""
        datum = cartan.cartan_datum(b2_r3())
        self.assertEqual('B2', datum.tag)
        self.assertEqual([(1, 0), (0, 1), (1, 1), (2, 1)], datum.roots)
        self.assertFalse(datum.simply_laced_or_g2)
        self.assertEqual(CycScalar.zeta(3, 1), cartan.short_label(b2_r3(), datum, (2, 1)))

    def test_not_cartan(self):
        """the rank two example with dim B(V) = 36 is not of Cartan type"""
        space = BraidedSpace.from_strings([['z^2', '-z^2'], ['1', '-1']], 6)
        datum = cartan.cartan_datum(space)
        self.assertFalse(datum.is_cartan)
        self.assertFalse(datum.is_finite)
        self.assertEqual([], datum.roots)

    def test_x_set(self):
        """B2: the pair (e_1, e_2) in simple-root coordinates"""
        datum = cartan.cartan_datum(b2_r3())
        self.assertEqual({frozenset({(1, 0), (1, 1)})}, cartan.x_set(datum))

    def test_hypotheses(self):
        """even ord(q_ii) violates the order hypotheses, ord 3 only the stronger one"""
        self.assertEqual([], cartan.thm43_hypotheses(a2_r3()))
        self.assertEqual(2, len(cartan.thm42_hypotheses(a2_r3())))
        fermions = BraidedSpace([[-1, -1], [1, -1]], 2)
        self.assertEqual(2, len(cartan.thm43_hypotheses(fermions)))


class TestA2(unittest.TestCase):
    """class for testing Cartan checks on A2 at a primitive cube root of unity"""

    @classmethod
    def setUpClass(cls):
        cls.basis = build_basis(a2_r3(), 10)
        cls.analysis = SuperLetterAnalysis(cls.basis)
        cls.datum = cartan.cartan_datum(a2_r3())

    def test_dimension(self):
        """dim B(V) = 27 with top degree 8"""
        self.assertEqual(27, self.basis.dimension())
        self.assertEqual(8, self.basis.top_degree())
        self.assertEqual([(1,), (1, 2), (2,)], self.analysis.hard_words())

    def test_root_checks(self):
        """root labels, the pair law and unique root vectors all hold"""
        self.assertEqual('pass', cartan.root_labels_check(self.datum, self.analysis).status)
        self.assertEqual('pass', cartan.pair_law_check(self.datum, self.analysis).status)
        self.assertEqual('pass', cartan.unique_root_vectors_check(self.datum, self.analysis).status)

    def test_presentation(self):
        """Serre relations and cubes of root vectors vanish"""
        relations = cartan.presentation(self.datum, self.analysis)
        self.assertEqual(2, len(relations.serre))
        self.assertEqual([((1, 0), (1,), 3), ((0, 1), (2,), 3), ((1, 1), (1, 2), 3)], relations.powers)
        text = relations.to_text(2)
        self.assertIn('power 1 1: [12]^3', text)
        self.assertTrue(text.startswith('serre 1 2: '))
        result = cartan.verify_presentation(self.datum, self.analysis, relations)
        self.assertEqual('pass', result.status)
        self.assertEqual([], result.details['unverified'])

    def test_orthogonal_pairs(self):
        """no orthogonal pairs on a simply laced type"""
        self.assertEqual([], cartan.orthogonal_pairs(self.analysis))
        self.assertEqual('pass', cartan.orthogonal_pairs_check(self.datum, self.analysis).status)
        self.assertEqual('pass', cartan.prop62_check(self.analysis).status)

    def test_thm56_bound(self):
        """dim L(V) reaches (N - 1)^3 = 8"""
        span = lie_closure(self.basis)
        result = cartan.thm56_bound(self.datum, self.analysis, span)
        self.assertEqual('pass', result.status)
        self.assertEqual(8, result.details['bound'])


class TestFormulas(unittest.TestCase):
    """class for testing closed-form helpers"""

    def test_thm56_bound_value(self):
        """hand values for one, three and six positive roots"""
        self.assertEqual(4, cartan.thm56_bound_value(5, 1))
        self.assertEqual(8, cartan.thm56_bound_value(3, 3))
        self.assertEqual(67, cartan.thm56_bound_value(5, 3))
        self.assertEqual(4111, cartan.thm56_bound_value(5, 6))
        self.assertEqual(6 ** 6 + 2 * 15, cartan.thm56_bound_value(7, 6))

    def test_prop62_exception(self):
        """equal labels, inverse negatives and the order 18 family"""
        z = CycScalar.zeta(3, 1)
        self.assertEqual('i', cartan.prop62_exception(z, z))
        self.assertEqual('ii', cartan.prop62_exception(z, -z.inverse()))
        self.assertEqual('', cartan.prop62_exception(CycScalar.one(3), CycScalar.one(3)))
        self.assertEqual('', cartan.prop62_exception(z, z * z))
        w = CycScalar.zeta(18, 1)
        self.assertEqual('iii', cartan.prop62_exception(-w ** 2, w))

    def test_serre_relation(self):
        """ad_c x_1 (x_2) = x_1 x_2 - q_12 x_2 x_1"""
        space = a2_r3()
        element = cartan.serre_relation(space, 1, 2, 1)
        self.assertEqual(space.one(), element.coefficient((1, 2)))
        self.assertEqual(-space.q[0][1], element.coefficient((2, 1)))


if __name__ == "__main__":
    unittest.main()
