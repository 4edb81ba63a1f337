"""Lyndon tests for finite words, stream prefixes and Sturmian morphisms."""

import logging

from config import Config
from models.morphism import GeneratorWord
from models.reports import LyndonStatus, Shape
from models.streams import WordStream
from models.words import LetterOrder, WordLike, text_of
from services.core_words import border_lengths, stream_prefix_text
from utils.errors import EmptyInput, InputError

logger = logging.getLogger(__name__)


def is_lyndon(w: WordLike, order: LetterOrder = LetterOrder.A_BEFORE_B) -> bool:
    """Strictly smaller than each of its proper suffixes."""
    text = text_of(w)
    if not text:
        raise EmptyInput('word')
    key = order.key(text)
    return all(key[i:] > key for i in range(1, len(key)))


def _precedes(u: str, v: str, order: LetterOrder) -> bool:
    """Letter-by-letter lexicographic u < v; a proper prefix precedes its extensions."""
    rank = {order.value[0]: 0, order.value[1]: 1}
    for x, y in zip(u, v):
        if x != y:
            return rank[x] < rank[y]
    return len(u) < len(v)


def is_lyndon_naive(w: WordLike, order: LetterOrder = LetterOrder.A_BEFORE_B) -> bool:
    text = text_of(w)
    if not text:
        raise EmptyInput('word')
    return all(_precedes(text, text[i:], order) for i in range(1, len(text)))


def is_unbordered(w: WordLike) -> bool:
    text = text_of(w)
    if not text:
        raise EmptyInput('word')
    return not border_lengths(text)


def lyndon_status_text(prefix: str, order: LetterOrder = LetterOrder.A_BEFORE_B) -> LyndonStatus:
    """First position whose suffix falls strictly below the matching prefix, if any."""
    n = len(prefix)
    if n < 2:
        raise InputError(f'Lyndon prefix status needs at least 2 letters, got {n}')
    key = order.key(prefix)
    for i in range(1, n):
        if key[i:] < key[:n - i]:
            return LyndonStatus.refuted(i)
    return LyndonStatus.consistent()


def lyndon_prefix_status(s: WordStream, n: int = None,
                         order: LetterOrder = LetterOrder.A_BEFORE_B,
                         budget: int = None) -> LyndonStatus:
    n = Config.DEFAULT_PREFIX_LENGTH if n is None else n
    return lyndon_status_text(stream_prefix_text(s, n, budget), order)


def preserves_lyndon(gw: GeneratorWord, order: LetterOrder = LetterOrder.A_BEFORE_B,
                     cap: int = None) -> bool:
    """Whether the morphism maps Lyndon words to Lyndon words under `order`.

    For b < a the word is conjugated by E first: E f E lies in {La, Rb}*
    exactly when f lies in {Lb, Ra}*.
    """
    from services.classify import shape_member
    from services.morphisms import exchange_conjugate, normalize_E

    normalized = normalize_E(gw)
    if normalized.flip:
        return False
    core = normalized.core
    if order is LetterOrder.B_BEFORE_A:
        core = exchange_conjugate(core)
    return shape_member(core, Shape.LYNDON_SHAPE, cap=cap)
