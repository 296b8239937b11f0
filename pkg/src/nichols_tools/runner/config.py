# -*- coding: utf-8 -*-
"""Job configs: JSON documents naming a braided space, a cutoff and check suites

A config looks like

    {"format_version": 1, "name": "example50", "M": 6, "n": 2,
     "q": [["z^2", "-z^2"], ["1", "-1"]], "cutoff": 12,
     "checks": ["identities", "theorems", "structure"], "cache_dir": null}

with optional crosscheck_degree, max_block_words and seed.

"""
import hashlib
import json
import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from nichols_tools.algebra.braiding import BraidedSpace
from nichols_tools.exceptions import ConfigError, ScalarParseError
from nichols_tools.nichols.basis import DEFAULT_CROSSCHECK_DEGREE, DEFAULT_MAX_BLOCK_WORDS
import nichols_tools.runner.constants as constants

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ('M', 'n', 'q', 'cutoff')
OPTIONAL_KEYS = ('format_version', 'name', 'checks', 'cache_dir', 'crosscheck_degree', 'max_block_words', 'seed')


@dataclass(frozen=True)
class JobConfig:
    order: int
    n: int
    q: tuple
    cutoff: int
    name: str = ''
    checks: tuple = constants.SUITES
    cache_dir: str = None
    crosscheck_degree: int = DEFAULT_CROSSCHECK_DEGREE
    max_block_words: int = DEFAULT_MAX_BLOCK_WORDS
    seed: int = 0
    format_version: int = constants.CONFIG_FORMAT_VERSION
    _space: BraidedSpace = field(default=None, repr=False, compare=False)

    @classmethod
    def from_file(cls, path):
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as error:
            raise ConfigError(f'cannot read config {path}: {error.strerror}')
        return cls.from_text(text, name=path.stem)

    @classmethod
    def from_text(cls, text: str, name: str = ''):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as error:
            raise ConfigError(error.msg, error.lineno, error.colno)
        if not isinstance(data, dict):
            raise ConfigError('config must be a JSON object', 1, 1)
        return cls.from_dict(data, text, name)

    @classmethod
    def from_dict(cls, data: dict, text: str = None, name: str = ''):
        missing = [key for key in REQUIRED_KEYS if key not in data]
        if missing:
            raise ConfigError(f'missing config keys: {", ".join(missing)}')
        unknown = sorted(set(data) - set(REQUIRED_KEYS) - set(OPTIONAL_KEYS))
        if unknown:
            raise ConfigError(f'unknown config keys: {", ".join(unknown)}')
        version = data.get('format_version', constants.CONFIG_FORMAT_VERSION)
        if version != constants.CONFIG_FORMAT_VERSION:
            raise ConfigError(f'unsupported config format_version {version}')
        order, n, cutoff = (_positive_int(data, key) for key in ('M', 'n', 'cutoff'))
        q = data['q']
        if not (isinstance(q, list) and len(q) == n and all(isinstance(row, list) and len(row) == n for row in q)):
            raise ConfigError(f'q must be an {n}x{n} matrix of scalar strings')
        if not all(isinstance(entry, str) for row in q for entry in row):
            raise ConfigError('q entries must be strings such as "z^2" or "-1"')
        checks = data.get('checks') or list(constants.SUITES)
        bad = [suite for suite in checks if suite not in constants.SUITES]
        if bad:
            raise ConfigError(f'unknown check suites: {", ".join(bad)}')
        space = _parse_space(q, order, text)
        config = cls(
            order=order, n=n, q=tuple(tuple(row) for row in q), cutoff=cutoff,
            name=data.get('name') or name,
            checks=tuple(suite for suite in constants.SUITES if suite in checks),
            cache_dir=data.get('cache_dir'),
            crosscheck_degree=_nonnegative_int(data, 'crosscheck_degree', DEFAULT_CROSSCHECK_DEGREE),
            max_block_words=_positive_int(data, 'max_block_words', DEFAULT_MAX_BLOCK_WORDS),
            seed=_nonnegative_int(data, 'seed', 0),
            _space=space,
        )
        logger.debug('config %s: M=%d n=%d cutoff=%d', config.name, order, n, cutoff)
        return config

    def space(self) -> BraidedSpace:
        if self._space is not None:
            return self._space
        return BraidedSpace.from_strings(self.q, self.order)

    def with_overrides(self, cutoff: int = None, cache_dir: str = None, checks=None):
        changes = {}
        if cutoff is not None:
            if cutoff < 1:
                raise ConfigError(f'cutoff must be at least 1, got {cutoff}')
            changes['cutoff'] = cutoff
        if cache_dir is not None:
            changes['cache_dir'] = cache_dir
        if checks:
            bad = [suite for suite in checks if suite not in constants.SUITES]
            if bad:
                raise ConfigError(f'unknown check suites: {", ".join(bad)}')
            changes['checks'] = tuple(suite for suite in constants.SUITES if suite in checks)
        return replace(self, **changes)

    def canonical(self) -> dict:
        """the braided space in canonical scalar form; two configs with equal spaces agree here"""
        return {'M': self.order, 'n': self.n, 'q': self.space().to_strings()}

    def cache_key(self) -> str:
        payload = json.dumps({'space': self.canonical(), 'cutoff': self.cutoff}, sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()

    def to_dict(self) -> dict:
        return {
            'format_version': self.format_version,
            'name': self.name,
            'M': self.order,
            'n': self.n,
            'q': [list(row) for row in self.q],
            'cutoff': self.cutoff,
            'checks': list(self.checks),
            'cache_dir': self.cache_dir,
            'crosscheck_degree': self.crosscheck_degree,
            'max_block_words': self.max_block_words,
            'seed': self.seed,
        }


def _positive_int(data: dict, key: str, default: int = None) -> int:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigError(f'{key} must be a positive integer, got {value!r}')
    return value


def _nonnegative_int(data: dict, key: str, default: int) -> int:
    value = data.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ConfigError(f'{key} must be a nonnegative integer, got {value!r}')
    return value


def _parse_space(q: list, order: int, text: str = None) -> BraidedSpace:
    try:
        space = BraidedSpace.from_strings(q, order)
    except ScalarParseError as error:
        line, column = _locate(text, error)
        raise ConfigError(str(error), line, column)
    except ValueError as error:
        raise ConfigError(str(error))
    return space


def _locate(text: str, error: ScalarParseError) -> tuple:
    """line and column in the config file of the character a scalar parse failed at"""
    if text is None:
        return None, None
    anchor = text.find('"q"')
    position = text.find(json.dumps(error.text), max(anchor, 0))
    if position < 0:
        return None, None
    position += error.column
    line = text.count('\n', 0, position) + 1
    column = position - (text.rfind('\n', 0, position) + 1) + 1
    return line, column
