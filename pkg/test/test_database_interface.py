# -*- coding: utf-8 -*-
"""Tests for database_interface

Created on Sat Nov 01 2021

@author: Avery

"""
import os
import tempfile
import unittest
import nichols_tools.runner.database_interface as dbi
from nichols_tools.exceptions import CacheChecksumError


class TestDatabaseInterface(unittest.TestCase):
    """class for testing SQLite3BasisDatabase"""

    def setUp(self):
        """fresh cache directory per test"""
        self.cache = tempfile.TemporaryDirectory()
        self.database = dbi.SQLite3BasisDatabase(os.path.join(self.cache.name, 'cache'))

    def tearDown(self):
        self.cache.cleanup()

    def test_sqlite3_blank_retrieval(self):
        """retrieving from a blank database returns None and creates the file"""
        self.assertIsNone(self.database.get_snapshot('missing'))
        self.assertTrue(os.path.exists(self.database.get_database_file()))

    def test_sqlite3_store_and_retrieve(self):
        """a stored snapshot comes back unchanged and replaces older entries"""
        self.database.store_snapshot('key', {'cutoff': 4, 'blocks': [[[1], [[1]]]]})
        self.assertEqual({'cutoff': 4, 'blocks': [[[1], [[1]]]]}, self.database.get_snapshot('key'))
        self.database.store_snapshot('key', {'cutoff': 5})
        self.assertEqual({'cutoff': 5}, self.database.get_snapshot('key'))
        self.assertEqual(1, len(self.database._execute_query('SELECT key FROM basis_snapshots')))

    def test_sqlite3_checksum(self):
        """a payload edited behind the cache's back is detected"""
        self.database.store_snapshot('key', {'cutoff': 4})
        self.database._execute_query('UPDATE basis_snapshots SET payload = ? WHERE key = ?',
                                     ('{"cutoff":5}', 'key'))
        with self.assertRaises(CacheChecksumError):
            self.database.get_snapshot('key')

    def test_sqlite3_evict(self):
        """evicted entries are gone"""
        self.database.store_snapshot('key', {'cutoff': 4})
        self.database.evict('key')
        self.assertIsNone(self.database.get_snapshot('key'))

    def test_payload_is_canonical(self):
        """key order does not change the payload or its checksum"""
        first = dbi.snapshot_payload({'a': 1, 'b': [1, 2]})
        second = dbi.snapshot_payload({'b': [1, 2], 'a': 1})
        self.assertEqual(first, second)
        self.assertEqual(dbi.checksum(first), dbi.checksum(second))


if __name__ == "__main__":
    unittest.main()
