# -*- coding: utf-8 -*-
"""Tests for get_nichols_basis

Created on Sat Nov 01 2021

@author: Avery

"""
import os
import tempfile
import unittest
from unittest import mock
from nichols_tools.nichols.basis import build_basis
from nichols_tools.runner.config import JobConfig
from nichols_tools.runner.get_nichols_basis import BasisPuller

RANK_ONE = {'M': 5, 'n': 1, 'q': [['z']], 'cutoff': 6, 'name': 'rank1_z5'}


class TestBasisPuller(unittest.TestCase):
    """class for testing BasisPuller"""

    def setUp(self):
        self.cache = tempfile.TemporaryDirectory()
        self.cache_dir = os.path.join(self.cache.name, 'cache')
        self.config = JobConfig.from_dict(dict(RANK_ONE, cache_dir=self.cache_dir))

    def tearDown(self):
        self.cache.cleanup()

    def test_for_config(self):
        """a config without cache_dir computes every time"""
        puller = BasisPuller.for_config(self.config.with_overrides())
        self.assertIsNotNone(puller.database)
        plain = BasisPuller.for_config(JobConfig.from_dict(dict(RANK_ONE)))
        self.assertIsNone(plain.database)
        self.assertIsNone(plain.stored_retriever)

    def test_cache_short_circuits_the_kernel(self):
        """the second fetch reads the cache instead of building"""
        puller = BasisPuller.sqlite_puller(self.cache_dir)
        first = puller.fetch_basis(self.config)
        with mock.patch('nichols_tools.runner.retrievers.build_basis', wraps=build_basis) as build:
            second = BasisPuller.sqlite_puller(self.cache_dir).fetch_basis(self.config)
            build.assert_not_called()
        self.assertEqual(first.hilbert(), second.hilbert())

    def test_changed_cutoff_misses(self):
        """a different cutoff is a different cache entry"""
        puller = BasisPuller.sqlite_puller(self.cache_dir)
        puller.fetch_basis(self.config)
        other = self.config.with_overrides(cutoff=4)
        with mock.patch('nichols_tools.runner.retrievers.build_basis', wraps=build_basis) as build:
            basis = puller.fetch_basis(other)
            build.assert_called_once()
        self.assertEqual(4, basis.cutoff)
        self.assertIsNotNone(puller.database.get_snapshot(other.cache_key()))

    def test_corrupt_cache_is_recomputed(self):
        """a tampered entry is evicted, rebuilt and stored again"""
        puller = BasisPuller.sqlite_puller(self.cache_dir)
        puller.fetch_basis(self.config)
        puller.database._execute_query('UPDATE basis_snapshots SET checksum = ?', ('0',))
        with mock.patch('nichols_tools.runner.retrievers.build_basis', wraps=build_basis) as build:
            basis = puller.fetch_basis(self.config)
            build.assert_called_once()
        self.assertEqual([1] * 5, basis.hilbert())
        self.assertIsNotNone(puller.database.get_snapshot(self.config.cache_key()))


if __name__ == "__main__":
    unittest.main()
