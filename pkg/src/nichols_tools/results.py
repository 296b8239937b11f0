# -*- coding: utf-8 -*-
"""Verdicts produced by the identity, theorem and structure checks"""
from dataclasses import dataclass, field

PASS = 'pass'
FAIL = 'fail'
SKIPPED = 'skipped'
INCONCLUSIVE = 'inconclusive'

STATUSES = (PASS, FAIL, SKIPPED, INCONCLUSIVE)


@dataclass
class CheckResult:
    """one named check; witness names a word or degree that reproduces a failure"""
    name: str
    status: str
    reason: str = ''
    witness: str = ''
    details: dict = field(default_factory=dict)
    suite: str = ''

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f'unknown check status {self.status!r}')

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def as_row(self) -> dict:
        return {
            'suite': self.suite,
            'check': self.name,
            'status': self.status,
            'reason': self.reason,
            'witness': self.witness,
        }


def verdict(name: str, holds: bool, reason: str = '', witness: str = '', **details) -> CheckResult:
    """pass/fail result; the reason and witness are kept only for failures"""
    if holds:
        return CheckResult(name, PASS, details=details)
    return CheckResult(name, FAIL, reason, witness, details)


def skipped(name: str, reason: str, **details) -> CheckResult:
    return CheckResult(name, SKIPPED, reason, details=details)


def inconclusive(name: str, reason: str, witness: str = '', **details) -> CheckResult:
    return CheckResult(name, INCONCLUSIVE, reason, witness, details=details)


def lower_bound_verdict(name: str, measured: int, stabilized: bool, bound, **details) -> CheckResult:
    """measured >= bound; a closure that did not stabilize only gives a lower bound"""
    details['bound'] = bound
    if measured >= bound:
        return verdict(name, True, **details)
    if not stabilized:
        return inconclusive(name, f'closure truncated at dimension {measured} below bound {bound}', **details)
    return verdict(name, False, f'dimension {measured} below bound {bound}', **details)
