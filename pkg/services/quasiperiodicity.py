"""Covering, quasiperiods, superprimitivity and prefix-scale quasiperiod evidence."""

import logging
from typing import List, Optional

import numpy as np

from config import Config
from models.reports import QuasiperiodEvidence, QuasiperiodReport, Verdict
from models.streams import WordStream
from models.words import FiniteWord, WordLike, text_of
from services.core_words import (
    border_lengths, letter_array, occurrences, stream_prefix_text, z_array,
)
from utils.errors import EmptyInput, InputError

logger = logging.getLogger(__name__)


def covered_prefix_length(u: WordLike, w: WordLike) -> int:
    """End of the greedy chain of occurrences of u starting at position 0 (0 if u is not a prefix)."""
    pat = text_of(u)
    text = text_of(w)
    if not pat:
        raise EmptyInput('quasiperiod candidate')
    if not text.startswith(pat):
        return 0

    end = len(pat)
    for start in occurrences(pat, text):
        if start > end:
            break
        end = start + len(pat)
    return end


def evidence_chain(u: WordLike, w: WordLike) -> List[int]:
    """Start positions of the greedy covering chain, each the furthest occurrence reachable."""
    pat = text_of(u)
    text = text_of(w)
    if not pat:
        raise EmptyInput('quasiperiod candidate')
    if not text.startswith(pat):
        return []

    m = len(pat)
    chain = [0]
    end = m
    best = None
    for start in occurrences(pat, text)[1:]:
        if start > end:
            if best is None:
                break
            chain.append(best)
            end = best + m
            best = None
            if start > end:
                break
        best = start
    if best is not None:
        chain.append(best)
    return chain


def covers(u: WordLike, w: WordLike) -> bool:
    text = text_of(w)
    if not text:
        raise EmptyInput('word')
    return covered_prefix_length(u, text) == len(text)


def quasiperiods(w: WordLike) -> List[FiniteWord]:
    """Every proper border of w that covers w, shortest first."""
    text = text_of(w)
    if not text:
        raise EmptyInput('word')
    return [FiniteWord(text[:k]) for k in border_lengths(text) if covers(text[:k], text)]


def naive_quasiperiods(w: WordLike) -> List[FiniteWord]:
    """Positional brute force: u != w such that every position of w lies in an occurrence of u.

    Only prefixes are tried since position 0 can only be covered by an occurrence at 0.
    """
    text = text_of(w)
    if not text:
        raise EmptyInput('word')

    n = len(text)
    result = []
    for length in range(1, n):
        u = text[:length]
        covered = [False] * n
        for start in range(n - length + 1):
            if text[start:start + length] == u:
                for i in range(start, start + length):
                    covered[i] = True
        if all(covered):
            result.append(FiniteWord(u))
    return result


def is_superprimitive(w: WordLike) -> bool:
    return not quasiperiods(w)


def smallest_quasiperiod(w: WordLike) -> Optional[FiniteWord]:
    found = quasiperiods(w)
    return found[0] if found else None


def detect_quasiperiods_text(prefix: str, max_length: int) -> QuasiperiodReport:
    """Evidence scan over the prefixes of `prefix` with length up to max_length."""
    n = len(prefix)
    if not 1 <= max_length < n:
        raise InputError(f'Need 1 <= max quasiperiod length < prefix length, got {max_length} and {n}')

    z = z_array(prefix)
    found = []
    for length in range(1, max_length + 1):
        starts = np.flatnonzero(z >= length)
        gaps = np.flatnonzero(np.diff(starts) > length)
        last = starts[gaps[0]] if gaps.size else starts[-1]
        covered = int(last) + length
        if covered >= n - length:
            found.append(QuasiperiodEvidence(FiniteWord(prefix[:length]), covered))

    verdict = Verdict.EVIDENCE_QUASIPERIODIC if found else Verdict.NO_QUASIPERIOD_DETECTED
    logger.debug(f"Quasiperiod scan of {n} letters up to length {max_length}: {len(found)} candidates")
    return QuasiperiodReport(
        prefix_length_analyzed=n,
        candidates_bound=max_length,
        found=tuple(found),
        verdict=verdict,
    )


def detect_quasiperiods_stream(s: WordStream, n: int = None, max_length: int = None,
                               budget: int = None) -> QuasiperiodReport:
    n = Config.DEFAULT_PREFIX_LENGTH if n is None else n
    max_length = Config.DEFAULT_MAX_QUASIPERIOD if max_length is None else max_length
    if not 1 <= max_length < n:
        raise InputError(f'Need 1 <= max quasiperiod length < prefix length, got {max_length} and {n}')
    return detect_quasiperiods_text(stream_prefix_text(s, n, budget), max_length)


def is_overlap_free(w: WordLike) -> bool:
    """True iff w has no factor of length 2p+1 with period p."""
    marks = letter_array(w)
    n = len(marks)
    for period in range(1, (n - 1) // 2 + 1):
        equal = (marks[:-period] == marks[period:]).astype(np.int64)
        sums = np.concatenate(([0], np.cumsum(equal)))
        window = period + 1
        if np.any(sums[window:] - sums[:-window] == window):
            return False
    return True
