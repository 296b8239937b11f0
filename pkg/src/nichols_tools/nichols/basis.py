# -*- coding: utf-8 -*-
"""The computable model of B(V) = T(V) / (sum of ker S_m)

Blocks of one Z^n degree are built in increasing total degree. A word x_a b with b
standard is a candidate for its block; it is kept as a standard word when its
skew derivations are independent of those of the smaller candidates, and is
otherwise rewritten through that dependency. The standard words of a block are
therefore the lex-smallest words spanning the quotient.

"""
import logging
from nichols_tools.algebra import words as wd
from nichols_tools.algebra import freealg
from nichols_tools.algebra.braiding import BraidedSpace, add_degrees, subtract_degrees, total_degree
from nichols_tools.algebra.freealg import FreeElement
from nichols_tools.algebra.linalg import Echelon, add_scaled
from nichols_tools.algebra.scalar import CycScalar
from nichols_tools.exceptions import CutoffExceededError, KernelMismatchError, ResourceLimitError

logger = logging.getLogger(__name__)

DEFAULT_CROSSCHECK_DEGREE = 8
DEFAULT_MAX_BLOCK_WORDS = 20000
#blocks with more words than this skip the symmetrizer crosscheck
DEFAULT_CROSSCHECK_WORDS = 1500
SNAPSHOT_VERSION = 1


class NicholsBasis:
    """Standard words, left multiplication tables and skew derivations of B(V) up to cutoff

    Parameters
    ----------
    space : BraidedSpace
    cutoff : int
        highest total degree computed
    standard : dict
        Z^n degree -> tuple of standard words, lex ascending
    left : dict
        (letter, standard word b) -> normal form of x_letter b as a word -> scalar dict
    derivations : dict
        standard word -> {letter: normal form of <y_letter, word>}
    terminated_at : int or None
        first total degree whose Hilbert coefficient is 0
    """

    def __init__(self, space: BraidedSpace, cutoff: int, standard: dict, left: dict, derivations: dict,
                 terminated_at=None):
        self.space = space
        self.cutoff = cutoff
        self.standard = standard
        self.left = left
        self.derivations = derivations
        self.terminated_at = terminated_at
        self.crosschecked_through = 0
        self.crosscheck_limit = 0
        self.crosscheck_skipped = []
        self._degree_of = {word: degree for degree, words in standard.items() for word in words}
        self._reduce_cache = {}
        self._pair_cache = {}

    #Hilbert data
    def top_degree(self) -> int:
        """highest total degree with computed blocks"""
        return self.terminated_at - 1 if self.terminated_at is not None else self.cutoff

    def hilbert(self) -> list:
        coefficients = [0] * (self.top_degree() + 1)
        for degree, words in self.standard.items():
            #blocks of the terminating degree are stored empty
            if words:
                coefficients[total_degree(degree)] += len(words)
        return coefficients

    def hilbert_series(self) -> dict:
        return {
            'coefficients': self.hilbert(),
            'blocks': {degree: len(words) for degree, words in sorted(self.standard.items()) if words},
            'terminated_at': self.terminated_at,
        }

    def dimension(self):
        """dim B(V) when the build terminated, else None"""
        return sum(self.hilbert()) if self.terminated_at is not None else None

    def is_finite(self) -> bool:
        return self.terminated_at is not None

    def block_dimension(self, degree) -> int:
        return len(self.standard.get(tuple(degree), ()))

    def standard_words(self, degree) -> tuple:
        return self.standard.get(tuple(degree), ())

    def is_standard(self, word) -> bool:
        return tuple(word) in self._degree_of

    def vanishes_at(self, total: int) -> bool:
        return self.terminated_at is not None and total >= self.terminated_at

    def is_computable(self, total: int) -> bool:
        """whether elements of this total degree can be reduced"""
        return total <= self.cutoff or self.vanishes_at(total)

    def check_total(self, total: int):
        if not self.is_computable(total):
            raise CutoffExceededError(total, self.cutoff)

    #reduction
    def left_apply(self, letter: int, vector: dict) -> dict:
        """normal form of x_letter * vector for a vector of standard words"""
        result = {}
        for word, coeff in vector.items():
            entry = self.left.get((letter, word))
            if entry is None:
                total = len(word) + 1
                if self.vanishes_at(total):
                    continue
                raise CutoffExceededError(total, self.cutoff)
            add_scaled(result, coeff, entry)
        return result

    def reduce_word(self, word) -> dict:
        word = tuple(word)
        if word in self._degree_of:
            return {word: self.space.one()}
        cached = self._reduce_cache.get(word)
        if cached is not None:
            return cached
        if self.vanishes_at(len(word)):
            result = {}
        else:
            self.check_total(len(word))
            result = self.left_apply(word[0], self.reduce_word(word[1:]))
        self._reduce_cache[word] = result
        return result

    def normal_form(self, element: FreeElement) -> FreeElement:
        """image of element in B(V) written in standard words"""
        result = {}
        for word, coeff in element.terms.items():
            add_scaled(result, coeff, self.reduce_word(word))
        return FreeElement._trusted(self.space, result)

    def is_zero(self, element: FreeElement) -> bool:
        return self.normal_form(element).is_zero()

    def _pair(self, u: tuple, v: tuple) -> dict:
        key = (u, v)
        cached = self._pair_cache.get(key)
        if cached is not None:
            return cached
        if not u:
            result = self.reduce_word(v)
        elif self.vanishes_at(len(u) + len(v)):
            result = {}
        else:
            result = self.left_apply(u[0], self._pair(u[1:], v))
        self._pair_cache[key] = result
        return result

    def product(self, a: FreeElement, b: FreeElement) -> FreeElement:
        """product in B(V); the result is a normal form"""
        a._check_space(b)
        result = {}
        for u, x in a.terms.items():
            for v, y in b.terms.items():
                add_scaled(result, x * y, self._pair(u, v))
        return FreeElement._trusted(self.space, result)

    def bracket(self, a: FreeElement, b: FreeElement, flavor: str = freealg.STD) -> FreeElement:
        return freealg.bracket(a, b, flavor, product=self.product)

    def power(self, a: FreeElement, exponent: int) -> FreeElement:
        return freealg.power(a, exponent, product=self.product)

    def generator(self, letter: int) -> FreeElement:
        return FreeElement.generator(self.space, letter)

    def kernel_basis(self, degree) -> list:
        """w - NF(w) for every non-standard word w of the degree block"""
        degree = tuple(degree)
        self.check_total(total_degree(degree))
        result = []
        for word in wd.words_of_degree(degree):
            if word in self._degree_of:
                continue
            element = FreeElement.monomial(self.space, word) - self.normal_form(FreeElement.monomial(self.space, word))
            result.append(element)
        return result

    def check_ideal(self, degree) -> bool:
        """kernel elements of degree times any letter, on either side, reduce to 0"""
        for element in self.kernel_basis(degree):
            for letter in range(1, self.space.n + 1):
                x = self.generator(letter)
                if not self.normal_form(x * element).is_zero():
                    return False
                if not self.normal_form(element * x).is_zero():
                    return False
        return True

    #validation against the symmetrizer
    def crosscheck(self, max_degree: int = DEFAULT_CROSSCHECK_DEGREE, max_words: int = DEFAULT_CROSSCHECK_WORDS):
        """prove ker S = span{w - NF(w)} on every block of total degree <= max_degree

        Blocks with more than max_words words are skipped and listed in
        crosscheck_skipped; crosschecked_through stops below the first such block.
        """
        limit = min(max_degree, self.cutoff)
        checked = 0
        skipped = []
        for degree in self.block_degrees():
            total = total_degree(degree)
            if total < 2 or total > limit:
                continue
            if self._crosscheck_block(degree, max_words):
                checked += 1
            else:
                skipped.append(degree)
        self.crosscheck_limit = limit
        self.crosscheck_skipped = skipped
        self.crosschecked_through = min([total_degree(degree) - 1 for degree in skipped] + [limit])
        if skipped:
            logger.warning('symmetrizer crosscheck skipped %d blocks above %d words, first %s; verified through degree %d',
                           len(skipped), max_words, skipped[0], self.crosschecked_through)
        logger.info('symmetrizer crosscheck passed on %d blocks through degree %d', checked, limit)
        return checked

    def _crosscheck_block(self, degree: tuple, max_words: int) -> bool:
        block = wd.words_of_degree(degree)
        if len(block) > max_words:
            return False
        images = {word: freealg.symmetrizer_image(self.space, word) for word in block}
        independent = Echelon()
        for word in self.standard_words(degree):
            added, _ = independent.insert(images[word])
            if not added:
                raise KernelMismatchError(degree, wd.format_word(word, self.space.n))
        for word in block:
            if word in self._degree_of:
                continue
            expected = {}
            for standard_word, coeff in self.reduce_word(word).items():
                add_scaled(expected, coeff, images[standard_word])
            if expected != images[word]:
                raise KernelMismatchError(degree, wd.format_word(word, self.space.n))
        return True

    def block_degrees(self) -> list:
        return sorted(self.standard, key=lambda d: (total_degree(d), d))

    #serialization
    def snapshot(self) -> dict:
        def vector(entries: dict) -> list:
            return [[list(word), str(coeff)] for word, coeff in sorted(entries.items())]

        return {
            'format_version': SNAPSHOT_VERSION,
            'order': self.space.order,
            'q': self.space.to_strings(),
            'cutoff': self.cutoff,
            'terminated_at': self.terminated_at,
            'crosschecked_through': self.crosschecked_through,
            'crosscheck_limit': self.crosscheck_limit,
            'crosscheck_skipped': [list(degree) for degree in self.crosscheck_skipped],
            'blocks': [[list(degree), [list(word) for word in self.standard[degree]]]
                       for degree in self.block_degrees()],
            'left': [[letter, list(word), vector(entry)] for (letter, word), entry in sorted(self.left.items())],
            'derivations': [[list(word), [[letter, vector(entry)] for letter, entry in sorted(by_letter.items())]]
                            for word, by_letter in sorted(self.derivations.items())],
        }

    @classmethod
    def from_snapshot(cls, data: dict, space: BraidedSpace = None):
        if data.get('format_version') != SNAPSHOT_VERSION:
            raise ValueError(f"unsupported snapshot version {data.get('format_version')}")
        order = data['order']
        if space is None:
            space = BraidedSpace.from_strings(data['q'], order)
        elif space.order != order or space.to_strings() != data['q']:
            raise ValueError('snapshot belongs to a different braided space')

        def vector(entries: list) -> dict:
            return {tuple(word): CycScalar.from_string(text, order) for word, text in entries}

        standard = {tuple(degree): tuple(tuple(word) for word in words) for degree, words in data['blocks']}
        left = {(letter, tuple(word)): vector(entry) for letter, word, entry in data['left']}
        derivations = {tuple(word): {letter: vector(entry) for letter, entry in by_letter}
                       for word, by_letter in data['derivations']}
        basis = cls(space, data['cutoff'], standard, left, derivations, data['terminated_at'])
        basis.crosschecked_through = data.get('crosschecked_through', 0)
        basis.crosscheck_limit = data.get('crosscheck_limit', basis.crosschecked_through)
        basis.crosscheck_skipped = [tuple(degree) for degree in data.get('crosscheck_skipped', ())]
        return basis


def build_basis(space: BraidedSpace, cutoff: int, crosscheck_degree: int = DEFAULT_CROSSCHECK_DEGREE,
                max_block_words: int = DEFAULT_MAX_BLOCK_WORDS,
                crosscheck_words: int = DEFAULT_CROSSCHECK_WORDS) -> NicholsBasis:
    """compute B(V) through total degree cutoff, or until a Hilbert coefficient vanishes"""
    if cutoff < 1:
        raise ValueError(f'cutoff must be at least 1, got {cutoff}')
    one = space.one()
    zero_degree = space.zero_degree()
    standard = {zero_degree: ((),)}
    derivations = {(): {}}
    left = {}
    frontier = [zero_degree]
    terminated_at = None
    letters = range(1, space.n + 1)

    def left_apply(letter, vector):
        result = {}
        for word, coeff in vector.items():
            add_scaled(result, coeff, left[(letter, word)])
        return result

    for total in range(1, cutoff + 1):
        targets = sorted({add_degrees(degree, space.letter_degree(a)) for degree in frontier for a in letters})
        coefficient = 0
        next_frontier = []
        for degree in targets:
            candidates = sorted((a,) + b for a in letters if degree[a - 1]
                                for b in standard.get(subtract_degrees(degree, space.letter_degree(a)), ()))
            if len(candidates) > max_block_words:
                raise ResourceLimitError(degree, len(candidates), max_block_words)
            logger.debug('block %s: %d candidates', degree, len(candidates))
            echelon = Echelon()
            kept = []
            for candidate in candidates:
                a, tail = candidate[0], candidate[1:]
                e_a = space.letter_degree(a)
                image = {}
                by_letter = {}
                for i in letters:
                    if not degree[i - 1]:
                        continue
                    derivative = {tail: one} if i == a else {}
                    inner = derivations[tail].get(i)
                    if inner:
                        factor = space.bicharacter(space.letter_degree(i), e_a).inverse()
                        add_scaled(derivative, factor, left_apply(a, inner))
                    if derivative:
                        by_letter[i] = derivative
                        for word, coeff in derivative.items():
                            image[(i, word)] = coeff
                added, expression = echelon.insert(image, label=candidate)
                if added:
                    kept.append(candidate)
                    derivations[candidate] = by_letter
                    left[(a, tail)] = {candidate: one}
                else:
                    left[(a, tail)] = expression
            standard[degree] = tuple(kept)
            coefficient += len(kept)
            if kept:
                next_frontier.append(degree)
        logger.info('degree %d: Hilbert coefficient %d over %d blocks', total, coefficient, len(targets))
        if coefficient == 0:
            terminated_at = total
            break
        frontier = next_frontier

    basis = NicholsBasis(space, cutoff, standard, left, derivations, terminated_at)
    if crosscheck_degree:
        basis.crosscheck(crosscheck_degree, crosscheck_words)
    return basis
