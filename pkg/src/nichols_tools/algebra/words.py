# -*- coding: utf-8 -*-
"""Words over the letters 1..n

Words are tuples of 1-based ints. Python's tuple comparison is exactly the
lexicographic order used throughout: x_1 < x_2 < ... and a proper prefix is
smaller than its extensions.

"""
import logging
from functools import lru_cache
from nichols_tools.exceptions import NotLyndonError

logger = logging.getLogger(__name__)


def lex_less(u: tuple, v: tuple) -> bool:
    return tuple(u) < tuple(v)


def is_lyndon(u: tuple) -> bool:
    """|u| = 1, or u < u2 u1 for every split u = u1 u2 into nonempty words"""
    u = tuple(u)
    if not u:
        return False
    return all(u < u[k:] + u[:k] for k in range(1, len(u)))


def lyndon_factorization(u: tuple) -> list:
    """Duval's algorithm: the unique nonincreasing factorization into Lyndon words"""
    u = tuple(u)
    factors = []
    k = 0
    while k < len(u):
        i, j = k, k + 1
        while j < len(u) and u[i] <= u[j]:
            i = k if u[i] < u[j] else i + 1
            j += 1
        while k <= i:
            factors.append(u[k:k + j - i])
            k += j - i
    return factors


def shirshov_decomposition(u: tuple) -> tuple:
    """(v, w) with u = vw, both Lyndon and v shortest"""
    u = tuple(u)
    if len(u) < 2 or not is_lyndon(u):
        raise NotLyndonError(f'{format_word(u)} has no Shirshov decomposition')
    for k in range(1, len(u)):
        v, w = u[:k], u[k:]
        if is_lyndon(v) and is_lyndon(w):
            return v, w
    raise NotLyndonError(f'{format_word(u)} has no Lyndon-Lyndon split')


def enumerate_lyndon(n: int, max_len: int):
    """Lyndon words of length <= max_len over 1..n in increasing lex order (Duval's successor)"""
    if max_len < 1 or n < 1:
        return
    word = [1]
    while word:
        yield tuple(word)
        m = len(word)
        while len(word) < max_len:
            word.append(word[len(word) - m])
        while word and word[-1] == n:
            word.pop()
        if word:
            word[-1] += 1


@lru_cache(maxsize=None)
def lyndon_words_by_degree(n: int, max_len: int) -> dict:
    """Lyndon words of length <= max_len bucketed by Z^n degree, each bucket in lex order"""
    buckets = {}
    for word in enumerate_lyndon(n, max_len):
        degree = [0] * n
        for letter in word:
            degree[letter - 1] += 1
        buckets.setdefault(tuple(degree), []).append(word)
    return {degree: tuple(words) for degree, words in buckets.items()}


def words_of_degree(degree: tuple) -> list:
    """all words with letter counts given by degree, in lex order"""
    degree = tuple(degree)
    result = []

    def extend(prefix, remaining):
        if not any(remaining):
            result.append(tuple(prefix))
            return
        for index, count in enumerate(remaining):
            if count:
                prefix.append(index + 1)
                remaining[index] -= 1
                extend(prefix, remaining)
                remaining[index] += 1
                prefix.pop()

    extend([], list(degree))
    return result


def format_word(word, n: int = 9) -> str:
    """digit string such as '112' for ranks up to 9, comma-joined letters otherwise"""
    if n <= 9:
        return ''.join(str(letter) for letter in word)
    return ','.join(str(letter) for letter in word)


def parse_word(text: str, n: int = 9) -> tuple:
    text = text.strip()
    if not text:
        return ()
    if n <= 9 and ',' not in text:
        letters = tuple(int(char) for char in text)
    else:
        letters = tuple(int(part) for part in text.split(','))
    if any(letter < 1 or letter > n for letter in letters):
        raise ValueError(f'word {text!r} uses a letter outside 1..{n}')
    return letters
