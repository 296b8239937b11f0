# -*- coding: utf-8 -*-
"""Tests for braiding

Created on Sat Nov 01 2021

@author: Avery

"""
import unittest
import numpy as np
from nichols_tools.algebra.braiding import BraidedSpace, add_degrees, unit_degree
from nichols_tools.algebra.scalar import CycScalar


def example50_space():
    return BraidedSpace.from_strings([['z^2', '-z^2'], ['1', '-1']], 6)


class TestBraidedSpace(unittest.TestCase):
    """class for testing diagonal braidings and their Dynkin data"""

    def test_bicharacter(self):
        """chi(e_i, e_j) = q_ij and chi is multiplicative"""
        space = example50_space()
        e1, e2 = unit_degree(2, 1), unit_degree(2, 2)
        self.assertEqual(space.q[0][1], space.bicharacter(e1, e2))
        self.assertEqual(space.q[1][0], space.bicharacter(e2, e1))
        alpha = add_degrees(e1, e1)
        expected = space.q[0][0] ** 2 * space.q[0][1] ** 2
        self.assertEqual(expected, space.bicharacter(alpha, add_degrees(e1, e2)))

    def test_dynkin(self):
        """one edge labelled q_12 q_21 = -z^2"""
        dynkin = example50_space().dynkin()
        self.assertEqual(1, dynkin.edge_count)
        self.assertEqual(CycScalar.from_string('-z^2', 6), dynkin.edge_labels[(1, 2)])
        self.assertEqual(6, dynkin.edge_labels[(1, 2)].mult_order())

    def test_example50_has_no_cartan_matrix(self):
        """-z^2 is no power q_11^a with a in 0..-3"""
        self.assertIsNone(example50_space().cartan_matrix())

    def test_cartan_matrix(self):
        """A2 and B2 at a primitive cube root of unity"""
        a2 = BraidedSpace.from_strings([['z', 'z^2'], ['1', 'z']], 3)
        np.testing.assert_array_equal(np.array([[2, -1], [-1, 2]]), a2.cartan_matrix())
        b2 = BraidedSpace.from_strings([['z', 'z'], ['1', 'z^2']], 3)
        np.testing.assert_array_equal(np.array([[2, -2], [-1, 2]]), b2.cartan_detect())

    def test_connected_components(self):
        """a space with no edges splits into points"""
        space = BraidedSpace.from_strings([['z', '1'], ['1', 'z']], 3)
        components = space.connected_components()
        self.assertEqual([(1,), (2,)], [letters for letters, _ in components])
        self.assertFalse(space.is_connected())
        self.assertTrue(example50_space().is_connected())

    def test_twist_symmetrize(self):
        """the twin has q'_12 = q'_21 with the same product and diagonal"""
        space = example50_space()
        twin = space.twist_symmetrize()
        self.assertEqual(twin.q[0][1], twin.q[1][0])
        self.assertEqual(space.q[0][1] * space.q[1][0], twin.q[0][1] * twin.q[1][0])
        self.assertEqual(space.q[0][0], twin.q[0][0])
        self.assertEqual(space.q[1][1], twin.q[1][1])
        self.assertEqual(0, twin.order % space.order)

    def test_rejects_bad_matrices(self):
        """zero entries and ragged rows are refused"""
        with self.assertRaises(ValueError):
            BraidedSpace([[0]], 3)
        with self.assertRaises(ValueError):
            BraidedSpace([[1, 1], [1]], 3)

    def test_strings_round_trip(self):
        """to_strings gives a matrix that rebuilds an equal space"""
        space = example50_space()
        self.assertEqual(space, BraidedSpace.from_strings(space.to_strings(), 6))
        self.assertEqual(hash(space), hash(BraidedSpace.from_strings(space.to_strings(), 6)))


if __name__ == "__main__":
    unittest.main()
