"""Sturmian generators, composition, E-normalization and the relation closure.

Generator words compose rightmost-first: [La, Lb] is La ∘ Lb, which sends
a to La(ba) = aba.
"""

import logging
from collections import deque
from functools import lru_cache
from typing import Iterator, Tuple

from config import Config
from models.morphism import BinaryMorphism, Generator, GeneratorWord, NormalizedWord
from models.words import FiniteWord, WordLike
from services.core_words import apply_morphism
from utils.errors import ClosureCapExceeded, InputError

logger = logging.getLogger(__name__)

GENERATOR_IMAGES = {
    Generator.E: BinaryMorphism(FiniteWord('b'), FiniteWord('a')),
    Generator.LA: BinaryMorphism(FiniteWord('a'), FiniteWord('ab')),
    Generator.LB: BinaryMorphism(FiniteWord('ba'), FiniteWord('b')),
    Generator.RA: BinaryMorphism(FiniteWord('a'), FiniteWord('ba')),
    Generator.RB: BinaryMorphism(FiniteWord('ab'), FiniteWord('b')),
}

# x y^n z -> x' y'^n z', in code letters (A=La, B=Lb, C=Ra, D=Rb)
REWRITE_RULES = (
    (('A', 'B', 'C'), ('C', 'D', 'A')),
    (('C', 'D', 'A'), ('A', 'B', 'C')),
    (('B', 'A', 'D'), ('D', 'C', 'B')),
    (('D', 'C', 'B'), ('B', 'A', 'D')),
)


def generator_image(g: Generator) -> BinaryMorphism:
    return GENERATOR_IMAGES[Generator(g)]


def apply(m: BinaryMorphism, w: WordLike) -> FiniteWord:
    return FiniteWord(apply_morphism(m, w))


def compose(f: BinaryMorphism, g: BinaryMorphism) -> BinaryMorphism:
    """f ∘ g."""
    return BinaryMorphism(apply(f, g.image_a), apply(f, g.image_b))


def morphism_of(gw: GeneratorWord) -> BinaryMorphism:
    result = BinaryMorphism.identity()
    for g in gw:
        result = compose(result, GENERATOR_IMAGES[g])
    return result


def morphisms_equal(f: GeneratorWord, g: GeneratorWord) -> bool:
    return morphism_of(f) == morphism_of(g)


def normalize_E(gw: GeneratorWord) -> NormalizedWord:
    """Push every E to the right end (E La = Lb E, E Ra = Rb E) and cancel pairs (E E = Id)."""
    flip = False
    core = []
    for g in gw:
        if g is Generator.E:
            flip = not flip
        else:
            core.append(g.exchanged if flip else g)
    return NormalizedWord(GeneratorWord(tuple(core)), flip)


def exchange_conjugate(gw: GeneratorWord) -> GeneratorWord:
    """E f E, obtained by swapping every letter subscript."""
    return GeneratorWord(tuple(g.exchanged for g in gw))


def rewrite_neighbours(code: str) -> Iterator[str]:
    """Words one relation step away from `code`."""
    n = len(code)
    for start in range(n):
        for (x, y, z), (x2, y2, z2) in REWRITE_RULES:
            if code[start] != x:
                continue
            end = start + 1
            while end < n and code[end] == y:
                end += 1
            # y != z, so only the maximal run can be followed by z
            if end < n and code[end] == z:
                run = end - start - 1
                yield code[:start] + x2 + y2 * run + z2 + code[end + 1:]


@lru_cache(maxsize=65536)
def closure_codes(code: str, cap: int) -> Tuple[str, ...]:
    """Breadth-first closure of an E-free code word under the rewriting rules."""
    if 'E' in code:
        raise InputError('Relation closure is defined on E-free generator words; normalize first')
    if cap < 1:
        raise InputError(f'Closure cap must be positive, got {cap}')

    seen = {code}
    order = [code]
    queue = deque([code])
    while queue:
        current = queue.popleft()
        for neighbour in rewrite_neighbours(current):
            if neighbour in seen:
                continue
            if len(seen) >= cap:
                logger.warning(f"Relation closure of {code} exceeded cap {cap}")
                raise ClosureCapExceeded(cap)
            seen.add(neighbour)
            order.append(neighbour)
            queue.append(neighbour)

    logger.debug(f"Relation closure of {code}: {len(order)} members")
    return tuple(order)


def relation_closure(core: GeneratorWord, cap: int = None) -> Tuple[GeneratorWord, ...]:
    """Every generator word equal to `core` under the length-preserving relations, BFS order."""
    cap = Config.CLOSURE_CAP if cap is None else cap
    return tuple(GeneratorWord.from_code(code) for code in closure_codes(core.code, cap))
