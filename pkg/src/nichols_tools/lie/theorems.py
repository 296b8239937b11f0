# -*- coding: utf-8 -*-
"""Theorem, bound and certificate checks over a computed B(V) and its Lie closures

Every check returns a CheckResult. A truncated closure only ever supplies a lower
bound for a dimension, so inequalities that it fails to reach are inconclusive
rather than failed.

"""
import logging
import math
from nichols_tools.algebra import freealg
from nichols_tools.algebra import words as wd
from nichols_tools.algebra.braiding import add_degrees, scale_degree, total_degree
from nichols_tools.algebra.freealg import left_adjoint, right_adjoint
from nichols_tools.algebra.scalar import CycScalar, NOT_ROOT_OF_UNITY, q_factorial
from nichols_tools.cartan import cartan_type
from nichols_tools.lie import identities
from nichols_tools.lie.closure import LieSpan
from nichols_tools.nichols.superletters import SuperLetterAnalysis
from nichols_tools.results import inconclusive, lower_bound_verdict, skipped, verdict

logger = logging.getLogger(__name__)

#certificate kinds for infinite dimension
ORDER_INFINITE = 'order-infinite'
COR22_PAIR = 'cor22-pair'
PROP41_ORTHOGONAL = 'prop41-orthogonal-at-cutoff'
CARTAN_NON_FINITE = 'cartan-non-finite'

LEMMA12_MAX_PAIRS = 400
PROP21_MAX_K = 3


def _finite_order(order) -> bool:
    return order != NOT_ROOT_OF_UNITY and order > 1


#membership checks
def check_powers_in_L(analysis: SuperLetterAnalysis, span: LieSpan):
    """[u]^t in L(V) for 1 <= t <= ord(p_uu), as far as the cutoff reaches"""
    basis = analysis.basis
    unreached = 0
    for record in analysis.hard_letters():
        limit = record.ord_puu if record.ord_puu != NOT_ROOT_OF_UNITY else basis.top_degree() // record.length
        for t in range(1, limit + 1):
            if not basis.is_computable(t * record.length):
                unreached += 1
                break
            if not span.contains(basis.power(record.value, t)):
                return verdict('lemma11-powers', False, 'power of a hard letter outside L(V)',
                               f'{record.label(analysis.space.n)}^{t}')
    return verdict('lemma11-powers', True, letters_cut_short=unreached)


def lemma11_identity_check(analysis: SuperLetterAnalysis, max_k: int = 3, max_total: int = 8):
    """l_[u]^k [u] = prod (1 - p_uu^j) [u]^(k+1) in T(V) for hard u"""
    checked = 0
    for record in analysis.hard_letters():
        for k in range(1, max_k + 1):
            if (k + 1) * record.length > max_total:
                break
            if not identities.lemma11_identity(analysis.space, record.word, k):
                return verdict('lemma11-identity', False, 'adjoint power differs from the scalar multiple',
                               f'{record.label(analysis.space.n)} k={k}')
            checked += 1
    return verdict('lemma11-identity', True, cases=checked)


def lemma7_check(analysis: SuperLetterAnalysis, span: LieSpan):
    """every hard letter value lies in L(V)"""
    for record in analysis.hard_letters():
        if not span.contains(record.value):
            return verdict('lemma7', False, 'hard letter outside L(V)', record.label(analysis.space.n))
    return verdict('lemma7', True)


def lemma12_check(span: LieSpan, max_pairs: int = LEMMA12_MAX_PAIRS):
    """for basis elements a, b of L(V) with p_ab p_ba != 1: ab, ba and [a, b]^- lie in L(V)"""
    basis = span.basis
    space = span.space
    pairs = 0
    for k, a in enumerate(span.elements):
        da = span.log[k].degree
        for j in range(k + 1):
            if pairs >= max_pairs:
                return verdict('lemma12', True, pairs=pairs, truncated=True)
            b, db = span.elements[j], span.log[j].degree
            if not basis.is_computable(total_degree(add_degrees(da, db))):
                continue
            if space.braiding_product(da, db).is_one():
                continue
            pairs += 1
            for element in (basis.product(a, b), basis.product(b, a), basis.bracket(a, b, freealg.MINUS)):
                if not span.contains(element):
                    return verdict('lemma12', False, 'product of L(V) elements outside L(V)',
                                   f'elements {k} and {j}')
    return verdict('lemma12', True, pairs=pairs, truncated=False)


def lemma14_check(analysis: SuperLetterAnalysis, max_k: int = 4):
    """l_i^k[j] = 0 <=> r_i^k[j] = 0 <=> (k)!_p_ii prod (p_ii^t p_ij p_ji - 1) = 0 in B(V)"""
    basis = analysis.basis
    space = basis.space
    checked = 0
    for i in range(1, space.n + 1):
        for j in range(1, space.n + 1):
            if i == j:
                continue
            x_i, x_j = basis.generator(i), basis.generator(j)
            p_ii = space.q[i - 1][i - 1]
            braiding_product = space.q[i - 1][j - 1] * space.q[j - 1][i - 1]
            for k in range(1, max_k + 1):
                if not basis.is_computable(k + 1):
                    break
                scalar = q_factorial(k, p_ii)
                for t in range(k):
                    scalar = scalar * (p_ii ** t * braiding_product - space.one())
                conditions = (left_adjoint(x_i, x_j, k, basis.product).is_zero(),
                              right_adjoint(x_i, x_j, k, basis.product).is_zero(),
                              scalar.is_zero())
                if len(set(conditions)) != 1:
                    return verdict('lemma14', False, 'vanishing conditions disagree', f'i={i} j={j} k={k}')
                checked += 1
    return verdict('lemma14', True, cases=checked)


def lemma63_check(analysis: SuperLetterAnalysis):
    """[[v], [w]]^- != 0 for hard u = vw, and [u]^- != 0 for hard u of length 2"""
    basis = analysis.basis
    for record in analysis.hard_letters():
        if record.length < 2:
            continue
        v, w = wd.shirshov_decomposition(record.word)
        if basis.bracket(analysis.value(v), analysis.value(w), freealg.MINUS).is_zero():
            return verdict('lemma63', False, '[[v], [w]]^- vanishes', record.label(analysis.space.n))
        if record.length == 2 and analysis.minus_value(record.word).is_zero():
            return verdict('lemma63', False, '[u]^- vanishes', record.label(analysis.space.n))
    return verdict('lemma63', True)


def _shirshov_pairs(u: tuple) -> list:
    """(v, w) at every internal node of the recursive Shirshov tree of u"""
    if len(u) < 2:
        return []
    v, w = wd.shirshov_decomposition(u)
    return [(v, w)] + _shirshov_pairs(v) + _shirshov_pairs(w)


def prop56_check(analysis: SuperLetterAnalysis, span: LieSpan, cartan_tag: str = None):
    """[u]^- in L(V) for hard u; on every input when each Shirshov node pair has p_vw p_wv != 1,
    and for all of D on Cartan types A, D, E and G2"""
    space = analysis.space
    simply_laced = cartan_tag is not None and all(part[0] in 'ADEG' for part in cartan_tag.split('+'))
    tested = 0
    for record in analysis.hard_letters():
        nodes_ok = all(not space.braiding_product(space.word_degree(v), space.word_degree(w)).is_one()
                       for v, w in _shirshov_pairs(record.word))
        if not (nodes_ok or simply_laced):
            continue
        tested += 1
        if not span.contains(analysis.minus_value(record.word)):
            clause = '(i)' if nodes_ok else '(ii)'
            return verdict('prop56', False, f'[u]^- outside L(V) under clause {clause}',
                           record.label(space.n))
    if not tested:
        return skipped('prop56', 'no hard letter meets either hypothesis')
    return verdict('prop56', True, tested=tested, cartan=cartan_tag)


def prop21_check(analysis: SuperLetterAnalysis, span: LieSpan, max_k: int = PROP21_MAX_K):
    """Eq. (5), det B^(0) and [u]^a [v] [u]^(k-a) in L(V) for ordered hard pairs"""
    basis = analysis.basis
    space = analysis.space
    records = analysis.hard_letters()
    identity_cache = {}
    tested = 0
    for first in records:
        for second in records:
            if first.word == second.word:
                continue
            p_uu = first.p_uu
            p_uv = space.bicharacter(first.degree, second.degree)
            p_vu = space.bicharacter(second.degree, first.degree)
            for k in range(1, max_k + 1):
                if not identities.prop21_precondition(p_uu, p_uv * p_vu, k):
                    break
                key = (p_uu, p_uv, p_vu, second.p_uu, k)
                if key not in identity_cache:
                    pair = identities.pair_space(space.order, p_uu, p_uv, p_vu, second.p_uu)
                    identity_cache[key] = identities.prop21_identities(pair, k)
                result = identity_cache[key]
                witness = f'u={first.label(space.n)} v={second.label(space.n)} k={k}'
                if result.failed:
                    return verdict('prop21', False, result.reason, witness)
                total = k * first.length + second.length
                if not basis.is_computable(total):
                    break
                for a in range(k + 1):
                    element = basis.product(basis.product(basis.power(first.value, a), second.value),
                                            basis.power(first.value, k - a))
                    if not span.contains(element):
                        return verdict('prop21', False, '[u]^a [v] [u]^(k-a) outside L(V)', f'{witness} a={a}')
                tested += 1
    if not tested:
        return skipped('prop21', 'no hard pair satisfies the precondition within cutoff')
    return verdict('prop21', True, cases=tested)


def eq7_suite(space, max_k: int = 4):
    """Eq. (7) containment for p_uu = 1, p_uv p_vu = 1 with p_uv over the M-th roots of unity"""
    p_vv = space.q[-1][-1]
    for exponent in range(space.order):
        result = identities.eq7_check(CycScalar.zeta(space.order, exponent), p_vv, max_k)
        if result.failed:
            result.witness = f'p_uv=z^{exponent} {result.witness}'
            return result
    return verdict('eq7', True, roots=space.order, max_k=max_k)


def flavor_equivalence_check(spans: dict):
    """std and c closures have equal dimensions in every Z^n degree"""
    std, c = spans[freealg.STD], spans[freealg.C]
    degrees = set(std.blocks) | set(c.blocks)
    for degree in sorted(degrees):
        if std.dimension_at(degree) != c.dimension_at(degree):
            return verdict('flavor-equivalence', False, 'std and c closures differ', str(degree))
    return verdict('flavor-equivalence', True)


#bounds
def bound_Lminus(analysis: SuperLetterAnalysis, span_minus: LieSpan):
    """dim L^-(V) >= |deg(D^-)| - 1 >= n + E_e - 1"""
    space = analysis.space
    degrees = {record.degree for record in analysis.hard_letters()
               if not analysis.minus_value(record.word).is_zero()}
    middle = len(degrees) - 1
    low = space.n + space.dynkin().edge_count - 1
    details = {'dimension': span_minus.dimension_label(), 'deg_D_minus': middle + 1, 'n_plus_edges': low + 1}
    if middle < low:
        return verdict('thm63-chain', False, '|deg(D^-)| - 1 below n + E_e - 1', **details)
    return lower_bound_verdict('thm63-chain', span_minus.dimension(), span_minus.stabilized, middle, **details)


def bound_L(analysis: SuperLetterAnalysis, span: LieSpan):
    """dim L(V) >= sum over D of (h_u - 1) + E_e'"""
    records = analysis.hard_letters()
    unknown = [record for record in records if record.height is None]
    if unknown:
        return skipped('prop333-bound', f'height of {unknown[0].label(analysis.space.n)} unknown at cutoff')
    edges = analysis.root_system()['edge_count']
    if any(record.height == math.inf for record in records):
        if span.stabilized:
            return verdict('prop333-bound', False, 'infinite height but L(V) finite')
        return inconclusive('prop333-bound', 'bound is infinite and the closure is truncated')
    bound = sum(record.height - 1 for record in records) + edges
    return lower_bound_verdict('prop333-bound', span.dimension(), span.stabilized, bound,
                               edge_count=edges, dimension=span.dimension_label())


#infinite dimension certificates
def cor22_pairs(analysis: SuperLetterAnalysis) -> list:
    """pairs (u, v) in D with p_uu = 1 and p_uv p_vu != 1"""
    records = analysis.hard_letters()
    return [(first, second) for first in records for second in records
            if first.word != second.word and first.p_uu.is_one()
            and not analysis.space.braiding_product(first.degree, second.degree).is_one()]


def cor22_growth(analysis: SuperLetterAnalysis, span: LieSpan, first, second) -> list:
    """for each k within cutoff: whether [u]^k [v] lies in L(V) and dim L(V) in that degree"""
    basis = analysis.basis
    rows = []
    k = 1
    while basis.is_computable(k * first.length + second.length) and not basis.vanishes_at(
            k * first.length + second.length):
        degree = add_degrees(scale_degree(first.degree, k), second.degree)
        element = basis.product(basis.power(first.value, k), second.value)
        rows.append({'k': k, 'degree': degree, 'in_lie': span.contains(element),
                     'nonzero': not element.is_zero(), 'lie_dimension': span.dimension_at(degree)})
        k += 1
    return rows


def prop41_witnesses(analysis: SuperLetterAnalysis) -> list:
    """hard u with p_uv p_vu = 1 for every other hard v, on connected spaces of rank > 1"""
    space = analysis.space
    if space.n < 2 or not space.is_connected():
        return []
    records = analysis.hard_letters()
    return [first for first in records
            if all(space.braiding_product(first.degree, second.degree).is_one()
                   for second in records if second.word != first.word)]


def infinity_certificates(analysis: SuperLetterAnalysis, span: LieSpan = None) -> list:
    """finite witnesses that dim B(V) = dim L(V) = infinity"""
    space = analysis.space
    certificates = []
    for record in analysis.hard_letters():
        if record.ord_puu == NOT_ROOT_OF_UNITY:
            certificates.append({'kind': ORDER_INFINITE, 'witness': record.label(space.n)})
    for first, second in cor22_pairs(analysis):
        certificate = {'kind': COR22_PAIR, 'witness': f'{first.label(space.n)},{second.label(space.n)}'}
        if span is not None:
            certificate['growth'] = cor22_growth(analysis, span, first, second)
        certificates.append(certificate)
    for record in prop41_witnesses(analysis):
        certificates.append({'kind': PROP41_ORTHOGONAL, 'witness': record.label(space.n)})
    matrix = space.cartan_matrix()
    if matrix is not None and not cartan_type.is_finite_type(matrix):
        certificates.append({'kind': CARTAN_NON_FINITE, 'witness': str(matrix.tolist())})
    return certificates


def cor22_check(analysis: SuperLetterAnalysis, span: LieSpan):
    """[u]^k [v] keeps landing in L(V) and the L(V) growth counter never drops"""
    pairs = cor22_pairs(analysis)
    if not pairs:
        return skipped('cor22', 'no hard pair with p_uu = 1 and p_uv p_vu != 1')
    first, second = pairs[0]
    rows = cor22_growth(analysis, span, first, second)
    witness = f'{first.label(analysis.space.n)},{second.label(analysis.space.n)}'
    for row in rows:
        if not (row['in_lie'] and row['nonzero'] and row['lie_dimension'] >= 1):
            return verdict('cor22', False, f"[u]^{row['k']}[v] not a nonzero element of L(V)", witness)
    if analysis.basis.is_finite():
        return verdict('cor22', False, 'B(V) terminated despite a Cor. 22 pair', witness)
    return verdict('cor22', True, pair=witness, reached=len(rows))


def _finite_side(span: LieSpan):
    """None when both sides are finite, else a failure reason"""
    if not span.stabilized:
        return 'B(V) terminated but the closure did not stabilize'
    return None


def thm9_check(analysis: SuperLetterAnalysis, span: LieSpan, certificates: list):
    """B(V) finite <=> L(V) finite, with |D| <= dim L(V)"""
    basis = analysis.basis
    records = analysis.hard_letters()
    if analysis.m_infinity_scan():
        return skipped('thm9', 'm-infinity elements present')
    if span.stabilized and len(records) > span.dimension():
        return verdict('thm9', False, '|D| exceeds dim L(V)', str(len(records)))
    if basis.is_finite():
        reason = _finite_side(span)
        return verdict('thm9', reason is None, reason or '', hard_letters=len(records),
                       lie_dimension=span.dimension_label())
    if certificates:
        return verdict('thm9', True, infinite=[certificate['kind'] for certificate in certificates])
    if not all(_finite_order(record.ord_puu) for record in records):
        return skipped('thm9', 'some hard letter has ord(p_uu) = 1 or infinity')
    if analysis.unknown_heights():
        return inconclusive('thm9', 'heights unknown at cutoff')
    return inconclusive('thm9', 'B(V) did not terminate by the cutoff and no infinity certificate applies')


def thm51_check(analysis: SuperLetterAnalysis, span: LieSpan, certificates: list):
    """connected, n > 1, no m-infinity: B(V) finite <=> L(V) finite"""
    space = analysis.space
    if space.n < 2 or not space.is_connected():
        return skipped('thm51', 'needs a connected space of rank > 1')
    if analysis.m_infinity_scan():
        return skipped('thm51', 'm-infinity elements present')
    if analysis.basis.is_finite():
        reason = _finite_side(span)
        return verdict('thm51', reason is None, reason or '')
    kinds = [certificate['kind'] for certificate in certificates
             if certificate['kind'] in (ORDER_INFINITE, COR22_PAIR, PROP41_ORTHOGONAL)]
    if kinds:
        return verdict('thm51', True, infinite=kinds)
    return inconclusive('thm51', 'B(V) did not terminate by the cutoff and no infinity certificate applies')


def cartan_equivalence_check(analysis: SuperLetterAnalysis, span: LieSpan):
    """Cartan type with 1 < ord(p_uu) < inf: L(V) finite <=> Cartan matrix finite <=> B(V) finite"""
    space = analysis.space
    matrix = space.cartan_matrix()
    if matrix is None:
        return skipped('cartan-equivalence', 'not of Cartan type')
    if not all(_finite_order(record.ord_puu) for record in analysis.hard_letters()):
        return skipped('cartan-equivalence', 'some hard letter has ord(p_uu) = 1 or infinity')
    if analysis.m_infinity_scan():
        return skipped('cartan-equivalence', 'm-infinity elements present')
    finite_type = cartan_type.is_finite_type(matrix)
    basis = analysis.basis
    if finite_type:
        if basis.is_finite():
            return verdict('cartan-equivalence', span.stabilized, 'L(V) did not stabilize')
        return inconclusive('cartan-equivalence', 'finite Cartan type but B(V) did not terminate by the cutoff')
    return verdict('cartan-equivalence', not basis.is_finite(), 'B(V) terminated for a non-finite Cartan matrix',
                   str(matrix.tolist()), certificate=CARTAN_NON_FINITE)


#direct sum
def direct_sum_check(basis, span: LieSpan) -> dict:
    """whether B(V) = F + L(V); pairs x_i, x_j with q_ij q_ji = 1 force a failure with witness ij"""
    space = basis.space
    obstruction = None
    for i in range(1, space.n + 1):
        for j in range(i + 1, space.n + 1):
            if (space.q[i - 1][j - 1] * space.q[j - 1][i - 1]).is_one() and obstruction is None:
                obstruction = wd.format_word((i, j), space.n)
    if not basis.is_finite() or not span.stabilized:
        return {'holds': None, 'witness': obstruction, 'obstruction': obstruction,
                'reason': 'B(V) or L(V) not finite at cutoff'}
    holds = span.dimension() == basis.dimension() - 1
    witness = obstruction
    if not holds and witness is None:
        witness = _first_gap(basis, span)
    return {'holds': holds, 'witness': None if holds else witness, 'obstruction': obstruction, 'reason': ''}


def _first_gap(basis, span: LieSpan) -> str:
    """smallest Z^n degree where L(V) is smaller than B(V)"""
    for degree in basis.block_degrees():
        if any(degree) and span.dimension_at(degree) < basis.block_dimension(degree):
            return str(degree)
    return ''


def lemma10_check(basis, span: LieSpan):
    """an edge-free pair of letters rules out B(V) = F + L(V)"""
    result = direct_sum_check(basis, span)
    if result['obstruction'] is None:
        return skipped('lemma10', 'every pair of letters is joined by an edge')
    if result['holds'] is None:
        return inconclusive('lemma10', result['reason'])
    return verdict('lemma10', not result['holds'], 'direct sum holds despite q_ij q_ji = 1',
                   result['obstruction'])
