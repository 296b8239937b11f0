# -*- coding: utf-8 -*-
"""Structure checks on a computed basis: PBW census, Shirshov closure of D and the kernel"""
import logging
from nichols_tools.algebra.braiding import total_degree
from nichols_tools.algebra import words as wd
from nichols_tools.exceptions import UnknownHeightError
from nichols_tools.nichols.basis import NicholsBasis
from nichols_tools.nichols.superletters import SuperLetterAnalysis
from nichols_tools.results import inconclusive, skipped, verdict

logger = logging.getLogger(__name__)

IDEAL_MAX_DEGREE = 5


def pbw_census_check(analysis: SuperLetterAnalysis):
    """restricted monomials in D with exponents below the heights count every Hilbert coefficient"""
    try:
        census = analysis.pbw_census()
    except UnknownHeightError as error:
        return inconclusive('thm8-census', str(error))
    measured = analysis.basis.hilbert()
    witness = next((str(m) for m, (a, b) in enumerate(zip(census['coefficients'], measured)) if a != b), '')
    return verdict('thm8-census', census['coefficients'] == measured, 'census differs from the Hilbert series',
                   witness, dimension=census['dimension'])


def shirshov_check(analysis: SuperLetterAnalysis):
    """u = vw hard forces v and w hard; the unpruned hardness test finds the same D"""
    if not analysis.prune:
        violations = analysis.shirshov_violations()
        witness = wd.format_word(violations[0], analysis.space.n) if violations else ''
        return verdict('lemma13-shirshov', not violations, 'hard word with a soft Shirshov part', witness)
    unpruned = SuperLetterAnalysis(analysis.basis, prune=False)
    violations = unpruned.shirshov_violations()
    if violations:
        return verdict('lemma13-shirshov', False, 'hard word with a soft Shirshov part',
                       wd.format_word(violations[0], analysis.space.n))
    pruned, full = set(analysis.hard_words()), set(unpruned.hard_words())
    difference = sorted(pruned ^ full)
    witness = wd.format_word(difference[0], analysis.space.n) if difference else ''
    return verdict('lemma13-shirshov', not difference, 'pruning changed D', witness, hard_letters=len(full))


def crosscheck_check(basis: NicholsBasis):
    """the build compared ker S with the pairing radical; a mismatch would have raised"""
    if not basis.crosscheck_limit:
        return skipped('kernel-crosscheck', 'crosscheck disabled')
    if basis.crosscheck_skipped:
        first = basis.crosscheck_skipped[0]
        return inconclusive('kernel-crosscheck', f'{len(basis.crosscheck_skipped)} blocks too large to crosscheck',
                            witness=str(first), through=basis.crosschecked_through)
    return verdict('kernel-crosscheck', True, through=basis.crosschecked_through)


def ideal_check(basis: NicholsBasis, max_degree: int = IDEAL_MAX_DEGREE):
    """kernel elements times a letter reduce to 0 on blocks of total degree < min(cutoff, max_degree)"""
    checked = 0
    for degree in basis.block_degrees():
        total = total_degree(degree)
        if total < 2 or total >= min(basis.cutoff, max_degree + 1):
            continue
        if not basis.check_ideal(degree):
            return verdict('kernel-ideal', False, 'kernel is not closed under letters', str(degree))
        checked += 1
    logger.debug('kernel ideal check on %d blocks', checked)
    return verdict('kernel-ideal', True, blocks=checked)
