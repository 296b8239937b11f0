# -*- coding: utf-8 -*-
"""Tests for cli

Created on Sat Nov 01 2021

@author: Avery

"""
import io
import json
import os
import tempfile
import unittest
from unittest import mock
from nichols_tools.exceptions import KernelMismatchError
from nichols_tools.runner import cli
import nichols_tools.runner.constants as constants


def run_cli(pargs):
    """exit code and stdout of one command line run"""
    with mock.patch('sys.stdout', new_callable=io.StringIO) as stdout, \
            mock.patch('sys.stderr', new_callable=io.StringIO):
        code = cli.main(pargs)
    return code, stdout.getvalue()


class TestCli(unittest.TestCase):
    """class for testing the command line surface"""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def write_config(self, text: str) -> str:
        path = os.path.join(self.directory.name, 'job.json')
        with open(path, 'w') as handle:
            handle.write(text)
        return path

    def test_hilbert_structured(self):
        """the structured report is deterministic JSON"""
        code, first = run_cli(['hilbert', '--config', 'rank1_z5', '--format', 'structured'])
        _, second = run_cli(['hilbert', '--config', 'rank1_z5', '--format', 'structured'])
        self.assertEqual(constants.EXIT_OK, code)
        self.assertEqual(first, second)
        report = json.loads(first)
        self.assertEqual([1, 1, 1, 1, 1], report['hilbert']['coefficients'])
        self.assertEqual(5, report['hilbert']['dimension'])
        self.assertEqual('hilbert', report['command'])
        self.assertNotIn('timings', report)

    def test_text_report(self):
        """text reports name the config and the tables they carry"""
        code, output = run_cli(['roots', '--config', 'rank1_z5'])
        self.assertEqual(constants.EXIT_OK, code)
        self.assertTrue(output.startswith('rank1_z5: M=5 n=1 cutoff=6'))
        self.assertIn('Hard super-letters', output)

    def test_check_passes(self):
        """every suite passes or skips on a single letter"""
        code, output = run_cli(['check', '--config', 'rank1_z5', '--format', 'structured', '--timings'])
        self.assertEqual(constants.EXIT_OK, code)
        report = json.loads(output)
        self.assertEqual(0, report['checks']['counts']['fail'])
        self.assertIn('basis', report['timings'])

    def test_config_error(self):
        """a broken config exits with 2"""
        path = self.write_config('{"M": 6, "n": 1, "q": [["z^"]], "cutoff": 4}')
        self.assertEqual(constants.EXIT_CONFIG_ERROR, run_cli(['hilbert', '--config', path])[0])
        missing = os.path.join(self.directory.name, 'absent.json')
        self.assertEqual(constants.EXIT_CONFIG_ERROR, run_cli(['hilbert', '--config', missing])[0])
        self.assertEqual(constants.EXIT_CONFIG_ERROR,
                         run_cli(['check', '--config', 'rank1_z5', '--suite', 'nothing'])[0])

    def test_resource_error(self):
        """a block above max_block_words exits with 3"""
        path = self.write_config('{"M": 6, "n": 2, "q": [["z^2", "-z^2"], ["1", "-1"]], '
                                 '"cutoff": 6, "max_block_words": 1}')
        self.assertEqual(constants.EXIT_RESOURCE_ERROR, run_cli(['hilbert', '--config', path])[0])

    def test_kernel_mismatch(self):
        """a failed kernel crosscheck exits with 1"""
        with mock.patch('nichols_tools.runner.cli.build_report', side_effect=KernelMismatchError((1, 1), '12')):
            self.assertEqual(constants.EXIT_CHECK_FAILED, run_cli(['hilbert', '--config', 'rank1_z5'])[0])

    def test_failed_check(self):
        """a failed check exits with 1 after printing the report"""
        with mock.patch('nichols_tools.runner.cli.build_report', return_value={}), \
                mock.patch('nichols_tools.runner.cli.render', return_value='report\n'), \
                mock.patch('nichols_tools.runner.cli.NicholsCheckSet.failed', return_value=True):
            code, output = run_cli(['check', '--config', 'rank1_z5'])
        self.assertEqual(constants.EXIT_CHECK_FAILED, code)
        self.assertEqual('report\n', output)

    def test_cache_option(self):
        """--cache stores the basis under the given directory"""
        cache = os.path.join(self.directory.name, 'cache')
        code, _ = run_cli(['hilbert', '--config', 'rank1_z5', '--cache', cache])
        self.assertEqual(constants.EXIT_OK, code)
        self.assertTrue(os.path.exists(os.path.join(cache, constants.DATABASE_FILE)))


if __name__ == "__main__":
    unittest.main()
