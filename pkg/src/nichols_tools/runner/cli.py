# -*- coding: utf-8 -*-
"""Command line entry point: nichols-tools {hilbert,roots,pbw,lie,present,check} --config FILE

Exit codes: 0 success, 1 a requested check failed, 2 config or parse error,
3 cutoff or resource error.

"""
import argparse
import logging
import sys
from pathlib import Path
from nichols_tools.exceptions import (ConfigError, CutoffExceededError, KernelMismatchError, ResourceLimitError,
                                      UnknownHeightError)
from nichols_tools.runner.config import JobConfig
from nichols_tools.runner.nichols_check_set import NicholsCheckSet
from nichols_tools.runner.report import build_report, render
import nichols_tools.runner.constants as constants

logger = logging.getLogger(__name__)

LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def load_config(args) -> JobConfig:
    """config from a path, or from the name of a shipped config such as 'example50'"""
    path = Path(args.config)
    if not path.exists() and constants.shipped_config(args.config).exists():
        path = constants.shipped_config(args.config)
    config = JobConfig.from_file(path)
    suites = [suite.strip() for suite in args.suite.split(',')] if args.suite else None
    return config.with_overrides(cutoff=args.cutoff, cache_dir=args.cache, checks=suites)


def run(args) -> int:
    try:
        config = load_config(args)
    except ConfigError as error:
        sys.stderr.write(f'config error: {error}\n')
        return constants.EXIT_CONFIG_ERROR
    check_set = NicholsCheckSet(config)
    try:
        report = build_report(check_set, args.command, timings=args.timings)
    except (CutoffExceededError, ResourceLimitError, UnknownHeightError) as error:
        sys.stderr.write(f'resource error: {error}\n')
        return constants.EXIT_RESOURCE_ERROR
    except KernelMismatchError as error:
        sys.stderr.write(f'kernel crosscheck failed: {error}\n')
        return constants.EXIT_CHECK_FAILED
    sys.stdout.write(render(report, args.format))
    if args.command == 'check' and check_set.failed():
        return constants.EXIT_CHECK_FAILED
    return constants.EXIT_OK


def main(pargs=None) -> int:
    args = parse_args(pargs)
    level = LOG_LEVELS[min(args.verbose, len(LOG_LEVELS) - 1)]
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    return run(args)


def parse_args(pargs=None):
    parser = argparse.ArgumentParser(
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        description=(
            'Nichols algebras of diagonal type and their braided Lie algebras'
        )
    )

    parser.add_argument('command', choices=constants.COMMANDS,
                        help='what to compute')

    parser.add_argument('--config', required=True,
                        help='job config JSON file, or the name of a shipped config')

    parser.add_argument('--cutoff', type=int, required=False, default=None,
                        help='override the config cutoff')

    parser.add_argument('--cache', required=False, default=None, metavar='DIR',
                        help='basis cache directory, overrides cache_dir')

    parser.add_argument('--suite', required=False, default=None, metavar='NAME,...',
                        help='check suites to run: ' + ', '.join(constants.SUITES))

    parser.add_argument('--format', choices=constants.FORMATS, default='text',
                        help='report format')

    parser.add_argument('--timings', action='store_true',
                        help='include stage timings in the report')

    parser.add_argument('--verbose', '-v', action='count', default=0,
                        help='log INFO with -v, DEBUG with -vv')

    return parser.parse_args(pargs)


if __name__ == '__main__':
    sys.exit(main())
