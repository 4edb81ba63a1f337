"""Directive sequences, Sturmian prefix generation and the exact quasiperiodicity decision.

A directive sequence lists blocks k = 1, 2, 3, ...; odd blocks expand to
La^(d-c) Ra^c and even blocks to Lb^(d-c) Rb^c, and the Sturmian word is the
limit of the composed prefixes applied to a.
"""

import logging
from typing import List, Optional

from config import Config
from models.directive import Block, DirectiveSequence
from models.morphism import Generator, GeneratorWord
from models.reports import ExactDecision, ShapeReport, Verdict, Violation
from models.words import FiniteWord, LetterOrder, WordLike, text_of
from services.morphisms import GENERATOR_IMAGES
from utils.errors import DirectiveViolation, GenerationStalled, InputError, TooFewBs

logger = logging.getLogger(__name__)


def validate_directive(seq: DirectiveSequence) -> Optional[Violation]:
    """First broken constraint, scanning preperiod, period and the period wraparound."""
    blocks = seq.blocks(len(seq.preperiod) + 2 * len(seq.period))
    for index, block in enumerate(blocks):
        k = index + 1
        if k >= 2 and block.d < 1:
            return Violation(k, f'd_{k} = 0 but every block after the first needs d >= 1')
        if k >= 2 and block.d > 0 and block.c == block.d and blocks[index - 1].c != 0:
            return Violation(k, f'c_{k} = d_{k} = {block.d} requires c_{k - 1} = 0, '
                                f'got c_{k - 1} = {blocks[index - 1].c}')
    return None


def require_valid(seq: DirectiveSequence) -> DirectiveSequence:
    violation = validate_directive(seq)
    if violation is not None:
        raise DirectiveViolation(violation)
    return seq


def block_generators(block: Block, odd: bool) -> List[Generator]:
    left, right = (Generator.LA, Generator.RA) if odd else (Generator.LB, Generator.RB)
    return [left] * (block.d - block.c) + [right] * block.c


def pair_generators(index: int, seq: DirectiveSequence) -> List[Generator]:
    a_block, b_block = seq.pair(index)
    return block_generators(a_block, odd=True) + block_generators(b_block, odd=False)


def directive_to_generators(seq: DirectiveSequence, pairs: int) -> GeneratorWord:
    if pairs < 1:
        raise InputError(f'Need at least one block pair, got {pairs}')
    gens = []
    for index in range(pairs):
        gens.extend(pair_generators(index, seq))
    return GeneratorWord(tuple(gens))


def _common_prefix_length(u: str, v: str) -> int:
    length = 0
    for x, y in zip(u, v):
        if x != y:
            break
        length += 1
    return length


def _images_by_pair(seq: DirectiveSequence, limit: int, pairs: int):
    """Yield f(a) truncated at limit after each expanded block pair."""
    image_a, image_b = 'a', 'b'
    for index in range(pairs):
        for g in pair_generators(index, seq):
            table = {ord('a'): image_a, ord('b'): image_b}
            step = GENERATOR_IMAGES[g]
            image_a, image_b = (
                step.image_a.letters.translate(table)[:limit],
                step.image_b.letters.translate(table)[:limit],
            )
        yield image_a


def generation_trace(seq: DirectiveSequence, pairs: int, limit: int = None) -> List[int]:
    """Common-prefix lengths of successive images of a, one per pair after the first."""
    require_valid(seq)
    limit = Config.DEFAULT_PREFIX_LENGTH if limit is None else limit
    trace = []
    previous = None
    for image in _images_by_pair(seq, limit, pairs):
        if previous is not None:
            trace.append(_common_prefix_length(previous, image))
        previous = image
    return trace


def sturmian_prefix_text(seq: DirectiveSequence, n: int, budget: int = None) -> str:
    require_valid(seq)
    if n < 1:
        raise InputError(f'Prefix length must be positive, got {n}')
    budget = Config.DIRECTIVE_PAIR_BUDGET if budget is None else budget

    previous = None
    stable = 0
    for pair_count, image in enumerate(_images_by_pair(seq, n, budget), start=1):
        if previous is not None:
            stable = _common_prefix_length(previous, image)
            if stable >= n:
                logger.debug(f"Directive prefix of length {n} stable after {pair_count} pairs")
                return image[:n]
        previous = image

    logger.warning(f"Directive generation stalled at {stable} of {n} letters after {budget} pairs")
    raise GenerationStalled(budget, stable, n)


def sturmian_prefix(seq: DirectiveSequence, n: int, budget: int = None) -> FiniteWord:
    return FiniteWord(sturmian_prefix_text(seq, n, budget))


def is_standard(seq: DirectiveSequence) -> bool:
    return all(block.c == 0 for pair in seq.preperiod + seq.period for block in pair)


def nonquasiperiodic_order(seq: DirectiveSequence) -> Optional[LetterOrder]:
    """Lyndon order of the decomposition family, or None when neither family fits.

    {La, Rb}: odd blocks have c = 0 and even blocks c = d (order a < b).
    {Lb, Ra}: odd blocks have c = d and even blocks c = 0 (order b < a).
    Blocks with d = 0 fit both.
    """
    over_la_rb = over_lb_ra = True
    for a_block, b_block in seq.preperiod + seq.period:
        over_la_rb = over_la_rb and a_block.c == 0 and b_block.c == b_block.d
        over_lb_ra = over_lb_ra and a_block.c == a_block.d and b_block.c == 0
    if over_la_rb:
        return LetterOrder.A_BEFORE_B
    if over_lb_ra:
        return LetterOrder.B_BEFORE_A
    return None


def is_nonquasiperiodic(seq: DirectiveSequence) -> bool:
    require_valid(seq)
    return nonquasiperiodic_order(seq) is not None


def decide(seq: DirectiveSequence) -> ExactDecision:
    require_valid(seq)
    order = nonquasiperiodic_order(seq)
    if order is None:
        return ExactDecision(Verdict.EXACT_QUASIPERIODIC, None)
    return ExactDecision(Verdict.EXACT_NON_QUASIPERIODIC, order)


def check_shape(prefix: WordLike) -> ShapeReport:
    """Initial a-run i, least internal a-run n, and whether the prefix fits a^i{ba^n, ba^(n+1)}*."""
    text = text_of(prefix)
    b_count = text.count('b')
    if b_count < 2:
        raise TooFewBs(b_count)

    runs = text.split('b')
    i = len(runs[0])
    internal = [len(run) for run in runs[1:-1]]
    n = min(internal)
    conforms = all(run in (n, n + 1) for run in internal) and i <= n + 1
    predicted = None
    if conforms and 0 < i <= n:
        predicted = FiniteWord('a' * i + 'b' + 'a' * (n - i + 1))
    return ShapeReport(conforms=conforms, i=i, n=n, predicted_quasiperiod=predicted)
