# -*- coding: utf-8 -*-
"""Retrieves a Nichols algebra and runs the check suites over it

Uses get_nichols_basis to compute B(V) or read it from the local cache, then
derives the super-letter data, the three Lie closures and the Cartan datum on
first use. Results of every suite are CheckResult rows that the report module
turns into tables.

"""
import logging
import time
import pandas as pd
from nichols_tools.algebra import freealg
from nichols_tools.cartan import analysis as cartan
from nichols_tools.exceptions import NotRootOfUnityError
from nichols_tools.lie import identities, theorems
from nichols_tools.lie.closure import lie_closures
from nichols_tools.nichols import invariance, structure
from nichols_tools.nichols.superletters import SuperLetterAnalysis
from nichols_tools.results import skipped
from nichols_tools.runner.config import JobConfig
from nichols_tools.runner.get_nichols_basis import BasisPuller
import nichols_tools.runner.constants as constants

logger = logging.getLogger(__name__)

PAIR_IDENTITY_MAX_K = 3


class NicholsCheckSet:

    def __init__(self, config: JobConfig, puller: BasisPuller = None):
        """
        Creates a check set for one job config

        Parameters:
            config (JobConfig) -- braided space, cutoff, suites and cache location
            puller (BasisPuller) -- where the basis comes from. Default follows config.cache_dir
        """
        self.config = config
        self.space = config.space()
        self.puller = puller or BasisPuller.for_config(config)
        self.timings = {}
        self.results = []
        self._basis = None
        self._analysis = None
        self._spans = None
        self._datum = None
        self._certificates = None

    def _timed(self, stage: str, compute):
        start = time.perf_counter()
        value = compute()
        self.timings[stage] = self.timings.get(stage, 0.0) + time.perf_counter() - start
        return value

    #lazily derived data
    @property
    def basis(self):
        if self._basis is None:
            self._basis = self._timed('basis', lambda: self.puller.fetch_basis(self.config))
        return self._basis

    @property
    def analysis(self) -> SuperLetterAnalysis:
        if self._analysis is None:
            analysis = SuperLetterAnalysis(self.basis)
            self._timed('superletters', analysis.hard_letters)
            self._analysis = analysis
        return self._analysis

    @property
    def spans(self) -> dict:
        if self._spans is None:
            self._spans = self._timed('lie', lambda: lie_closures(self.basis))
        return self._spans

    @property
    def span(self):
        return self.spans[freealg.STD]

    @property
    def datum(self) -> cartan.CartanDatum:
        if self._datum is None:
            self._datum = cartan.cartan_datum(self.space)
        return self._datum

    @property
    def certificates(self) -> list:
        if self._certificates is None:
            self._certificates = theorems.infinity_certificates(self.analysis, self.span)
        return self._certificates

    #suites
    def run(self, suites=None) -> list:
        """runs the requested suites, config.checks by default"""
        suites = suites or self.config.checks
        runners = {
            constants.IDENTITIES: self.identity_checks,
            constants.THEOREMS: self.theorem_checks,
            constants.STRUCTURE: self.structure_checks,
        }
        self.results = []
        for suite in constants.SUITES:
            if suite not in suites:
                continue
            logger.info('running %s suite', suite)
            results = self._timed(suite, runners[suite])
            for result in results:
                result.suite = suite
                logger.debug('%s/%s: %s %s', suite, result.name, result.status, result.reason)
            self.results.extend(results)
            logger.info('%s suite finished: %d checks, %d failed', suite, len(results),
                        sum(result.failed for result in results))
        return self.results

    def identity_checks(self) -> list:
        space = self.space
        results = [identities.jacobi_suite(space, seed=self.config.seed)]
        if space.n >= 2:
            pair = identities.pair_space(space.order, space.q[0][0], space.q[0][1], space.q[1][0], space.q[1][1])
            results.extend(identities.prop21_identities(pair, k) for k in range(1, PAIR_IDENTITY_MAX_K + 1))
        else:
            results.append(skipped('prop21-identities', 'needs rank >= 2'))
        results.append(theorems.eq7_suite(space))
        results.append(identities.lemma14_grid(orders=(space.order,)))
        results.append(theorems.lemma14_check(self.analysis))
        results.append(theorems.lemma11_identity_check(self.analysis))
        return results

    def theorem_checks(self) -> list:
        analysis, span, datum = self.analysis, self.span, self.datum
        tag = datum.tag if datum.is_finite else None
        return [
            theorems.lemma7_check(analysis, span),
            theorems.check_powers_in_L(analysis, span),
            theorems.lemma12_check(span),
            theorems.lemma63_check(analysis),
            theorems.prop56_check(analysis, span, tag),
            theorems.prop21_check(analysis, span),
            theorems.bound_Lminus(analysis, self.spans[freealg.MINUS]),
            theorems.bound_L(analysis, span),
            theorems.thm9_check(analysis, span, self.certificates),
            theorems.thm51_check(analysis, span, self.certificates),
            theorems.cartan_equivalence_check(analysis, span),
            theorems.cor22_check(analysis, span),
            theorems.flavor_equivalence_check(self.spans),
            theorems.lemma10_check(self.basis, span),
            cartan.thm56_bound(datum, analysis, span),
        ]

    def structure_checks(self) -> list:
        analysis, datum = self.analysis, self.datum
        results = [
            structure.crosscheck_check(self.basis),
            structure.ideal_check(self.basis),
            structure.pbw_census_check(analysis),
            structure.shirshov_check(analysis),
            cartan.root_labels_check(datum, analysis),
            cartan.pair_law_check(datum, analysis),
            cartan.unique_root_vectors_check(datum, analysis),
            cartan.verify_presentation(datum, analysis),
            cartan.orthogonal_pairs_check(datum, analysis),
            cartan.prop62_check(analysis),
            invariance.component_product_check(self.basis),
        ]
        try:
            results.append(invariance.twist_invariance_check(self.basis))
        except NotRootOfUnityError as error:
            results.append(skipped('twist-invariance', str(error)))
        return results

    def summary(self) -> pd.DataFrame:
        """one row per check result"""
        columns = ['suite', 'check', 'status', 'reason', 'witness']
        return pd.DataFrame([result.as_row() for result in self.results], columns=columns)

    def failed(self) -> bool:
        return any(result.failed for result in self.results)
