"""Finite binary words: parsing, matching, borders, balance and stream prefixes."""

import logging
from functools import lru_cache
from typing import List, Optional

import numpy as np

from config import Config
from models.morphism import BinaryMorphism
from models.streams import (
    FIBONACCI_MORPHISM, THUE_MORSE_MORPHISM, Directive, Fibonacci, FixedPoint, MorphicImage,
    Periodic, ThueMorse, WordStream,
)
from models.words import FiniteWord, Letter, WordLike, text_of
from utils.errors import EmptyPattern, InputError, NotProlongable

logger = logging.getLogger(__name__)


def parse_word(text: str) -> FiniteWord:
    """Map 'a'/'b' text to a FiniteWord; InvalidCharacter names the first bad position."""
    return FiniteWord(text)


def count_letter(w: WordLike, x: Letter) -> int:
    return text_of(w).count(Letter(x).value)


def failure_function(w: WordLike) -> List[int]:
    """fail[k] = length of the longest proper border of w[:k+1]."""
    text = text_of(w)
    fail = [0] * len(text)
    k = 0
    for i in range(1, len(text)):
        while k and text[i] != text[k]:
            k = fail[k - 1]
        if text[i] == text[k]:
            k += 1
        fail[i] = k
    return fail


def occurrences(pattern: WordLike, text: WordLike) -> List[int]:
    """Ascending start positions of pattern in text (Knuth-Morris-Pratt)."""
    pat = text_of(pattern)
    txt = text_of(text)
    if not pat:
        raise EmptyPattern()

    fail = failure_function(pat)
    found = []
    k = 0
    for i, char in enumerate(txt):
        while k and char != pat[k]:
            k = fail[k - 1]
        if char == pat[k]:
            k += 1
        if k == len(pat):
            found.append(i - k + 1)
            k = fail[k - 1]
    return found


def occurrences_naive(pattern: WordLike, text: WordLike) -> List[int]:
    pat = text_of(pattern)
    txt = text_of(text)
    if not pat:
        raise EmptyPattern()
    return [p for p in range(len(txt) - len(pat) + 1) if txt[p:p + len(pat)] == pat]


def border_lengths(w: WordLike) -> List[int]:
    """Lengths of the nonempty proper borders of w, ascending."""
    text = text_of(w)
    if not text:
        return []
    fail = failure_function(text)
    lengths = []
    k = fail[-1]
    while k:
        lengths.append(k)
        k = fail[k - 1]
    return lengths[::-1]


def proper_borders(w: WordLike) -> List[FiniteWord]:
    text = text_of(w)
    return [FiniteWord(text[:k]) for k in border_lengths(text)]


def z_array(w: WordLike) -> np.ndarray:
    """z[i] = length of the longest common prefix of w and w[i:], with z[0] = |w|."""
    text = text_of(w)
    n = len(text)
    z = [0] * n
    if n:
        z[0] = n
    left = right = 0
    for i in range(1, n):
        if i < right:
            z[i] = min(right - i, z[i - left])
        while i + z[i] < n and text[z[i]] == text[i + z[i]]:
            z[i] += 1
        if i + z[i] > right:
            left, right = i, i + z[i]
    return np.asarray(z, dtype=np.int64)


def letter_array(w: WordLike) -> np.ndarray:
    """0/1 array with 1 for each a."""
    return (np.frombuffer(text_of(w).encode('ascii'), dtype=np.uint8) == ord('a')).astype(np.int64)


def is_balanced(w: WordLike) -> bool:
    """True iff equal-length factors differ by at most one in their count of a."""
    a_marks = letter_array(w)
    n = len(a_marks)
    if n < 2:
        return True
    sums = np.concatenate(([0], np.cumsum(a_marks)))
    for length in range(1, n):
        counts = sums[length:] - sums[:-length]
        if counts.max() - counts.min() > 1:
            return False
    return True


def apply_morphism(m: BinaryMorphism, w: WordLike) -> str:
    return text_of(w).translate(m.table)


@lru_cache(maxsize=256)
def _fixed_point_prefix(m: BinaryMorphism, seed: str, n: int) -> str:
    image = m.image_of(seed).letters
    if not image.startswith(seed) or len(image) < 2:
        raise NotProlongable(seed, image)
    word = seed
    while len(word) < n:
        word = word.translate(m.table)
    return word[:n]


def _periodic_prefix(head: str, cycle: str, n: int) -> str:
    if n <= len(head):
        return head[:n]
    rest = n - len(head)
    return head + (cycle * (rest // len(cycle) + 1))[:rest]


def stream_prefix(s: WordStream, n: int, budget: Optional[int] = None) -> FiniteWord:
    """The length-n prefix of the infinite word described by s."""
    return FiniteWord(stream_prefix_text(s, n, budget))


def stream_prefix_text(s: WordStream, n: int, budget: Optional[int] = None) -> str:
    if n < 1:
        raise InputError(f'Prefix length must be positive, got {n}')

    if isinstance(s, Periodic):
        return _periodic_prefix(s.head.letters, s.cycle.letters, n)
    if isinstance(s, FixedPoint):
        return _fixed_point_prefix(s.morphism, Letter(s.seed).value, n)
    if isinstance(s, ThueMorse):
        return _fixed_point_prefix(THUE_MORSE_MORPHISM, 'a', n)
    if isinstance(s, Fibonacci):
        return _fixed_point_prefix(FIBONACCI_MORPHISM, 'a', n)
    if isinstance(s, Directive):
        from services.sturmian import sturmian_prefix_text
        return sturmian_prefix_text(s.seq, n, budget=Config.DIRECTIVE_PAIR_BUDGET if budget is None else budget)
    if isinstance(s, MorphicImage):
        # non-erasing, so an inner prefix of length n already maps past n
        inner = stream_prefix_text(s.inner, n, budget)
        return apply_morphism(s.morphism, inner)[:n]

    raise InputError(f'Unsupported stream spec: {s!r}')
