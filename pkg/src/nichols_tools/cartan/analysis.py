# -*- coding: utf-8 -*-
"""Cartan-type analysis of a computed B(V)

Roots are compared through the symmetrized form B(a, b) = sum d_i a_ij a_i b_j with
the short simple roots at d_i = 1. On a connected component of finite Cartan type
q_ii = q^(d_i) for q the label of a short node, and then p_ab p_ba = q^B(a, b) and
p_aa = q^(B(a, a)/2).

"""
import logging
from dataclasses import dataclass, field
import itertools
from itertools import combinations
from sympy import Rational
from nichols_tools.algebra import freealg
from nichols_tools.algebra import words as wd
from nichols_tools.algebra.braiding import BraidedSpace, add_degrees
from nichols_tools.algebra.freealg import FreeElement
from nichols_tools.algebra.scalar import NOT_ROOT_OF_UNITY, is_primitive_root
from nichols_tools.cartan import cartan_type
from nichols_tools.exceptions import CutoffExceededError
from nichols_tools.lie.closure import LieSpan
from nichols_tools.nichols.superletters import SuperLetterAnalysis
from nichols_tools.results import inconclusive, lower_bound_verdict, skipped, verdict

logger = logging.getLogger(__name__)

NOT_FINITE_TYPE = 'not finite type'

#Lemma 8''' X-sets are only translated for these ranks
MAX_X_SET_RANK = 4


@dataclass
class CartanDatum:
    """Cartan data of a braided space of Cartan type

    matrix : np.ndarray or None when the space is not of Cartan type
    tag : type tag such as 'A2' or 'B2+A1', or NOT_FINITE_TYPE
    roots : positive roots in simple-root coordinates, empty unless finite
    order : N = ord(q_11)
    """
    matrix: object
    tag: str
    roots: list
    order: object
    symmetrizer: list = None

    @property
    def is_cartan(self) -> bool:
        return self.matrix is not None

    @property
    def is_finite(self) -> bool:
        return self.tag != NOT_FINITE_TYPE

    @property
    def simply_laced_or_g2(self) -> bool:
        return self.is_finite and all(part[0] in 'ADEG' for part in self.tag.split('+'))

    def form(self, alpha, beta) -> int:
        """B(alpha, beta) = sum d_i a_ij alpha_i beta_j"""
        total = Rational(0)
        for i, a_i in enumerate(alpha):
            for j, b_j in enumerate(beta):
                total += self.symmetrizer[i] * int(self.matrix[i, j]) * a_i * b_j
        return int(total)

    def summary(self) -> dict:
        return {
            'matrix': None if self.matrix is None else self.matrix.tolist(),
            'tag': self.tag,
            'positive_roots': [list(root) for root in self.roots],
            'N': self.order if self.order != NOT_ROOT_OF_UNITY else 'inf',
        }


def cartan_datum(space: BraidedSpace) -> CartanDatum:
    order = space.q[0][0].mult_order()
    matrix = space.cartan_matrix()
    if matrix is None or not cartan_type.is_finite_type(matrix):
        return CartanDatum(matrix, NOT_FINITE_TYPE, [], order)
    d = [Rational(value.numerator, value.denominator) for value in cartan_type.symmetrizer(matrix)]
    return CartanDatum(matrix, cartan_type.classify(matrix), cartan_type.positive_roots(matrix), order, d)


def short_label(space: BraidedSpace, datum: CartanDatum, degree):
    """q of the component carrying degree: the label of one of its short simple roots"""
    support = [i for i, value in enumerate(degree) if value]
    for part in cartan_type.components(datum.matrix):
        if support[0] in part:
            short = min(part, key=lambda i: (datum.symmetrizer[i], i))
            return space.q[short][short]
    raise ValueError(f'degree {degree} has empty support')


#hypotheses
def thm43_hypotheses(space: BraidedSpace) -> list:
    """violations of: odd ord(q_ii); ord(q_ii) prime to 3 when q_ij q_ji is q_ii^3 or q_jj^3;
    finite ord(q_ij)"""
    violations = []
    for i in range(space.n):
        order = space.q[i][i].mult_order()
        if order == NOT_ROOT_OF_UNITY or order % 2 == 0:
            violations.append(f'ord(q_{i + 1}{i + 1}) = {order} is not odd')
    for i in range(space.n):
        for j in range(space.n):
            if i == j:
                continue
            product = space.q[i][j] * space.q[j][i]
            if product in (space.q[i][i] ** 3, space.q[j][j] ** 3):
                order = space.q[i][i].mult_order()
                if order != NOT_ROOT_OF_UNITY and order % 3 == 0:
                    violations.append(f'ord(q_{i + 1}{i + 1}) = {order} divisible by 3 on a triple bond to {j + 1}')
            if space.q[i][j].mult_order() == NOT_ROOT_OF_UNITY:
                violations.append(f'ord(q_{i + 1}{j + 1}) is infinite')
    return violations


def thm42_hypotheses(space: BraidedSpace) -> list:
    """Thm 4.3's violations plus ord(q_ii) <= 3"""
    violations = thm43_hypotheses(space)
    for i in range(space.n):
        order = space.q[i][i].mult_order()
        if order != NOT_ROOT_OF_UNITY and order <= 3:
            violations.append(f'ord(q_{i + 1}{i + 1}) = {order} is not > 3')
    return violations


#root labels
def root_labels_check(datum: CartanDatum, analysis: SuperLetterAnalysis):
    """p_aa = q^(B(a, a)/2) for every hard letter, with ord(p_aa) = N under odd, 3-coprime orders"""
    space = analysis.space
    if not datum.is_finite:
        return skipped('lemma42-root-labels', 'not of finite Cartan type')
    roots = set(datum.roots)
    orders_hold = not thm43_hypotheses(space)
    skipped_orders = 0
    for record in analysis.hard_letters():
        label = record.label(space.n)
        if record.degree not in roots:
            return verdict('lemma42-root-labels', False, 'hard letter degree is not a positive root', label)
        q = short_label(space, datum, record.degree)
        exponent = datum.form(record.degree, record.degree) // 2
        if record.p_uu != q ** exponent:
            return verdict('lemma42-root-labels', False, f'p_uu differs from q^{exponent}', label)
        if not orders_hold:
            skipped_orders += 1
        elif record.ord_puu != q.mult_order():
            return verdict('lemma42-root-labels', False, f'ord(p_uu) = {record.ord_puu} differs from N', label)
    if skipped_orders:
        logger.warning('order test skipped on %d roots: Thm 4.3 order hypotheses fail', skipped_orders)
    return verdict('lemma42-root-labels', True, order_checks_skipped=skipped_orders)


def pair_law_check(datum: CartanDatum, analysis: SuperLetterAnalysis):
    """p_ab p_ba = q^B(a, b) for hard letters, and in {q, q^-1, 1} on simply laced types"""
    space = analysis.space
    if not datum.is_finite:
        return skipped('lemma4222-pair-law', 'not of finite Cartan type')
    simply_laced = all(part[0] in 'ADE' for part in datum.tag.split('+'))
    components = cartan_type.components(datum.matrix)
    records = analysis.hard_letters()
    for first, second in combinations(records, 2):
        measured = space.braiding_product(first.degree, second.degree)
        witness = f'{first.label(space.n)},{second.label(space.n)}'
        joined = any(_support_in(first.degree, part) and _support_in(second.degree, part) for part in components)
        if not joined:
            if not measured.is_one():
                return verdict('lemma4222-pair-law', False, 'roots of different components braid nontrivially',
                               witness)
            continue
        q = short_label(space, datum, first.degree)
        exponent = datum.form(first.degree, second.degree)
        if measured != q ** exponent:
            return verdict('lemma4222-pair-law', False, f'p_ab p_ba differs from q^{exponent}', witness)
        if simply_laced and abs(exponent) > 1:
            return verdict('lemma4222-pair-law', False, 'p_ab p_ba not in {q, q^-1, 1}', witness)
    return verdict('lemma4222-pair-law', True, simply_laced=simply_laced)


def _support_in(degree, part) -> bool:
    return all(i in part for i, value in enumerate(degree) if value)


def unique_root_vectors_check(datum: CartanDatum, analysis: SuperLetterAnalysis):
    """one hard letter per positive root, and no other hard degrees, through the computed top degree"""
    if not datum.is_finite:
        return skipped('lemma8-unique', 'not of finite Cartan type')
    violations = thm43_hypotheses(analysis.space)
    if violations:
        return skipped('lemma8-unique', violations[0])
    top = analysis.basis.top_degree()
    expected = {root for root in datum.roots if sum(root) <= top}
    counts = analysis.letters_per_degree()
    for degree, count in sorted(counts.items()):
        if degree not in expected:
            return verdict('lemma8-unique', False, 'hard degree outside the positive roots', str(degree))
        if count != 1:
            return verdict('lemma8-unique', False, f'{count} hard letters share one root', str(degree))
    missing = sorted(expected - set(counts))
    if missing:
        return verdict('lemma8-unique', False, 'positive root without a hard letter', str(missing[0]))
    if not analysis.basis.is_finite() and len(expected) < len(datum.roots):
        return inconclusive('lemma8-unique', 'roots beyond the computed degrees', roots=len(expected))
    return verdict('lemma8-unique', True, roots=len(expected))


#presentation
@dataclass
class Presentation:
    """Serre relations keyed by (i, j) and power relations as (root, word, N)"""
    serre: list = field(default_factory=list)
    powers: list = field(default_factory=list)
    order: object = None
    violations: list = field(default_factory=list)

    def to_text(self, n: int) -> str:
        lines = []
        for (i, j), element in self.serre:
            lines.append(f'serre {i} {j}: {element}')
        for root, word, exponent in self.powers:
            lines.append(f"power {' '.join(str(c) for c in root)}: [{wd.format_word(word, n)}]^{exponent}")
        for violation in self.violations:
            lines.append(f'hypothesis {violation}')
        return '\n'.join(lines) + '\n'


def serre_relation(space: BraidedSpace, i: int, j: int, exponent: int) -> FreeElement:
    """ad_c x_i^exponent (x_j) in T(V)"""
    x_i = FreeElement.generator(space, i)
    element = FreeElement.generator(space, j)
    for _ in range(exponent):
        element = freealg.bracket(x_i, element, freealg.C)
    return element


def presentation(datum: CartanDatum, analysis: SuperLetterAnalysis) -> Presentation:
    """relations ad_c x_i^(1 - a_ij) x_j and x_a^N, x_a the hard letter of degree a"""
    space = analysis.space
    result = Presentation(order=datum.order, violations=thm43_hypotheses(space))
    if not datum.is_finite:
        return result
    for i in range(space.n):
        for j in range(space.n):
            if i != j:
                element = serre_relation(space, i + 1, j + 1, 1 - int(datum.matrix[i, j]))
                result.serre.append(((i + 1, j + 1), element))
    if datum.order == NOT_ROOT_OF_UNITY:
        return result
    by_degree = {}
    for record in analysis.hard_letters():
        by_degree.setdefault(record.degree, record.word)
    for root in datum.roots:
        if root in by_degree:
            result.powers.append((root, by_degree[root], datum.order))
    return result


def verify_presentation(datum: CartanDatum, analysis: SuperLetterAnalysis, relations: Presentation = None):
    """every Serre relation and, cutoff permitting, every x_a^N is zero in B(V)"""
    basis = analysis.basis
    if not datum.is_finite:
        return skipped('thm43-presentation', 'not of finite Cartan type')
    relations = relations or presentation(datum, analysis)
    if relations.violations:
        return skipped('thm43-presentation', relations.violations[0], violations=relations.violations)
    for (i, j), element in relations.serre:
        try:
            reduced = basis.normal_form(element)
        except CutoffExceededError:
            return inconclusive('thm43-presentation', f'Serre relation {i} {j} beyond the cutoff')
        if not reduced.is_zero():
            return verdict('thm43-presentation', False, 'Serre relation nonzero in B(V)', f'{i} {j}')
    unverified = []
    for root, word, exponent in relations.powers:
        if not basis.is_computable(exponent * len(word)):
            unverified.append(wd.format_word(word, basis.space.n))
            continue
        if not basis.power(analysis.value(word), exponent).is_zero():
            return verdict('thm43-presentation', False, 'root vector power nonzero in B(V)',
                           wd.format_word(word, basis.space.n))
    if unverified:
        logger.warning('%d power relations unverified at cutoff %d', len(unverified), basis.cutoff)
    return verdict('thm43-presentation', True, serre=len(relations.serre), powers=len(relations.powers),
                   unverified=unverified, thm42_violations=thm42_hypotheses(basis.space))


#orthogonal pairs
def orthogonal_pairs(analysis: SuperLetterAnalysis) -> list:
    """triples (a, b, a + b) of hard degrees with p_ab p_ba = 1, a < b"""
    space = analysis.space
    degrees = sorted({record.degree for record in analysis.hard_letters()})
    present = set(degrees)
    triples = []
    for alpha, beta in combinations(degrees, 2):
        gamma = add_degrees(alpha, beta)
        if gamma in present and space.braiding_product(alpha, beta).is_one():
            triples.append((alpha, beta, gamma))
    return triples


def x_set(datum: CartanDatum) -> set:
    """unordered pairs of X in the node order of datum.matrix, for a single B_n, C_n or F_4 component"""
    tag = datum.tag
    rank = int(tag[1:])
    perm = cartan_type.node_permutation(datum.matrix, tag)

    def simple(vector):
        coordinates = cartan_type.epsilon_to_simple(tag, vector)
        degree = [0] * len(datum.matrix)
        for k, value in enumerate(coordinates):
            degree[perm[k]] = value
        return tuple(degree)

    def unit(i):
        vector = [0] * rank
        vector[i] = 1
        return vector

    pairs = set()
    if tag[0] in 'BF':
        for i, j in combinations(range(rank), 2):
            pairs.add(frozenset((simple(unit(i)), simple(unit(j)))))
    if tag[0] == 'C':
        for i, j in combinations(range(rank), 2):
            minus = [a - b for a, b in zip(unit(i), unit(j))]
            plus = [a + b for a, b in zip(unit(i), unit(j))]
            pairs.add(frozenset((simple(minus), simple(plus))))
    if tag[0] == 'F':
        half = Rational(1, 2)
        spins = [[half] + [half * sign for sign in signs] for signs in itertools.product((1, -1), repeat=3)]
        roots = set(datum.roots)
        for first, second in combinations(spins, 2):
            total = [a + b for a, b in zip(first, second)]
            pair = frozenset((simple(first), simple(second)))
            if simple(total) in roots:
                pairs.add(pair)
    return pairs


def orthogonal_pairs_check(datum: CartanDatum, analysis: SuperLetterAnalysis):
    """none on A, D, E and G2; exactly the X-set on B_n, C_n (n <= 4) and F_4"""
    if not datum.is_finite:
        return skipped('lemma8-orthogonal', 'not of finite Cartan type')
    violations = thm43_hypotheses(analysis.space)
    if violations:
        return skipped('lemma8-orthogonal', violations[0])
    triples = orthogonal_pairs(analysis)
    if datum.simply_laced_or_g2:
        witness = str(triples[0][:2]) if triples else ''
        return verdict('lemma8-orthogonal', not triples, 'orthogonal pair on a simply laced or G2 type', witness)
    if '+' in datum.tag or int(datum.tag[1:]) > MAX_X_SET_RANK:
        return skipped('lemma8-orthogonal', f'no X-set comparison for {datum.tag}', pairs=len(triples))
    expected = x_set(datum)
    if not analysis.basis.is_finite():
        top = analysis.basis.top_degree()
        expected = {pair for pair in expected if sum(sum(root) for root in pair) <= top}
    measured = {frozenset(triple[:2]) for triple in triples}
    difference = sorted(tuple(sorted(pair)) for pair in measured ^ expected)
    return verdict('lemma8-orthogonal', not difference, 'orthogonal pairs differ from the X-set',
                   str(difference[0]) if difference else '', pairs=len(triples))


#Prop 62
def prop62_exception(p_vv, p_ww) -> str:
    """the first exceptional case (i)-(viii) that (p_vv, p_ww) meets, or ''"""
    def trivial(value):
        return value.is_one() or (-value).is_one()

    cases = (
        ('i', p_ww == p_vv and not trivial(p_vv)),
        ('ii', p_ww == -p_vv.inverse() and not trivial(p_vv)),
        ('iii', p_vv == -p_ww ** 2 and is_primitive_root(p_ww, 18)),
        ('iv', p_vv == -p_ww.inverse() ** 4 and is_primitive_root(p_ww, 18)),
        ('v', p_vv == -p_ww.inverse() ** 4 and is_primitive_root(p_ww, 10)),
        ('vi', p_ww == -p_vv ** 2 and is_primitive_root(p_vv, 18)),
        ('vii', p_ww == -p_vv.inverse() ** 4 and is_primitive_root(p_vv, 18)),
        ('viii', p_ww == -p_vv.inverse() ** 4 and is_primitive_root(p_vv, 10)),
    )
    return next((label for label, holds in cases if holds), '')


def prop62_scan(analysis: SuperLetterAnalysis) -> list:
    """pairs v != w in D with deg v + deg w a hard degree, p_vw p_wv = 1 and no exceptional case"""
    space = analysis.space
    records = analysis.hard_letters()
    degrees = {record.degree for record in records}
    violations = []
    for v, w in combinations(records, 2):
        if add_degrees(v.degree, w.degree) not in degrees:
            continue
        if not space.braiding_product(v.degree, w.degree).is_one():
            continue
        if not prop62_exception(v.p_uu, w.p_uu):
            violations.append((v.word, w.word))
    return violations


def prop62_check(analysis: SuperLetterAnalysis):
    space = analysis.space
    if not space.is_connected() or not analysis.basis.is_finite():
        return skipped('prop62', 'needs a connected space with finite B(V)')
    violations = prop62_scan(analysis)
    witness = ','.join(wd.format_word(word, space.n) for word in violations[0]) if violations else ''
    return verdict('prop62', not violations, 'p_vw p_wv = 1 outside the exceptional cases', witness)


#dimension bound
def thm56_bound_value(order: int, root_count: int) -> int:
    """(N - 1)^|roots| + ([N/2] - 1) |roots| (|roots| - 1) / 2"""
    return (order - 1) ** root_count + (order // 2 - 1) * root_count * (root_count - 1) // 2


def thm56_pair_condition(analysis: SuperLetterAnalysis, order: int) -> list:
    """pairs u != v in D with p_uu^i p_(u,uv) p_(uv,u) = 1 for some 1 <= i <= 2([N/2] - 1) - 2"""
    space = analysis.space
    records = analysis.hard_letters()
    upper = 2 * (order // 2 - 1) - 2
    failures = []
    for u in records:
        for v in records:
            if u.word == v.word:
                continue
            uv = add_degrees(u.degree, v.degree)
            product = space.bicharacter(u.degree, uv) * space.bicharacter(uv, u.degree)
            if any((u.p_uu ** i * product).is_one() for i in range(1, upper + 1)):
                failures.append((u.word, v.word))
    return failures


def thm56_bound(datum: CartanDatum, analysis: SuperLetterAnalysis, span: LieSpan):
    """dim L(V) >= (N - 1)^|roots| + ([N/2] - 1) |roots| (|roots| - 1) / 2 on A, D, E and G2"""
    space = analysis.space
    if not datum.simply_laced_or_g2 or not space.is_connected():
        return skipped('thm56-bound', 'needs a connected Cartan type A, D, E or G2')
    violations = thm43_hypotheses(space)
    if violations:
        return skipped('thm56-bound', violations[0])
    if analysis.unknown_heights():
        return skipped('thm56-bound', 'heights unknown at cutoff')
    order = datum.order
    failures = thm56_pair_condition(analysis, order)
    if failures:
        witness = ','.join(wd.format_word(word, space.n) for word in failures[0])
        return verdict('thm56-bound', False, 'p_uu^i p_(u,uv) p_(uv,u) = 1 inside the excluded range', witness)
    bound = thm56_bound_value(order, len(datum.roots))
    return lower_bound_verdict('thm56-bound', span.dimension(), span.stabilized, bound,
                               dimension=span.dimension_label())
