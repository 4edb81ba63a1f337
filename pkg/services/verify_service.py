"""Verification suites: golden examples, exhaustive sweeps and prefix-scale theorem checks.

Each check is a function registered under a suite with the @check decorator.
Checks run in declaration order; one crashing check is recorded as a failure
and does not stop the suite.
"""

import itertools
import logging
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional

import numpy as np

from config import Config
from models.directive import DirectiveSequence
from models.morphism import BinaryMorphism, Generator, GeneratorWord
from models.reports import (
    CheckResult, Classification, LyndonOutcome, OnSturmianClassification, PatternId, Shape,
    Verdict, VerifyOutcome,
)
from models.streams import Directive, MorphicImage, WordStream
from models.words import FiniteWord, LetterOrder
from services import classify as classify_service
from services import core_words, lyndon, morphisms, quasiperiodicity, sturmian
from services.stream_specs import parse_directive, parse_generator_word, parse_stream_spec
from utils.errors import (
    DirectiveViolation, EmptyPattern, InvalidCharacter, QuasiwordsError, TooFewBs, UnknownSuite,
)

logger = logging.getLogger(__name__)

FOUR_GENERATORS = (Generator.LA, Generator.LB, Generator.RA, Generator.RB)
ALL_GENERATORS = (Generator.E,) + FOUR_GENERATORS

FIBONACCI = parse_stream_spec('fibonacci')
THUE_MORSE = parse_stream_spec('thue-morse')
ABA_OMEGA = parse_stream_spec('periodic:ab,a')
BAB_OMEGA = parse_stream_spec('periodic:ba,b')
BA_OMEGA = parse_stream_spec('periodic:b,a')
A_OMEGA = parse_stream_spec('periodic:,a')
LA_RB_STREAM = parse_stream_spec('directive:pre=[]per=[(1,0)(1,1)]')
LB_RA_STREAM = parse_stream_spec('directive:pre=[(0,0)(1,0)]per=[(1,1)(1,0)]')
NON_QUASIPERIODIC_STURMIAN = (LA_RB_STREAM, LB_RA_STREAM)
NON_QUASIPERIODIC_FIXTURES = (ABA_OMEGA, BA_OMEGA) + NON_QUASIPERIODIC_STURMIAN

EXTRA_DIRECTIVES = (
    'pre=[]per=[(1,0)(1,0)]',
    'pre=[(2,0)(3,0)]per=[(1,0)(1,0)]',
    'pre=[(0,0)(2,0)]per=[(1,0)(2,0)]',
    'pre=[]per=[(2,1)(1,0)]',
    'pre=[]per=[(3,0)(1,1)]',
    'pre=[]per=[(1,1)(2,0)]',
    'pre=[(1,0)(1,0)]per=[(1,0)(1,1)]',
)


@dataclass
class HarnessContext:
    seed: int
    prefix_length: int = field(default_factory=lambda: Config.DEFAULT_PREFIX_LENGTH)
    max_quasiperiod: int = field(default_factory=lambda: Config.DEFAULT_MAX_QUASIPERIOD)
    budget: int = field(default_factory=lambda: Config.DIRECTIVE_PAIR_BUDGET)
    cap: int = field(default_factory=lambda: Config.CLOSURE_CAP)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def detect(self, stream: WordStream, n: int = None, max_length: int = None):
        n = self.prefix_length if n is None else n
        max_length = self.max_quasiperiod if max_length is None else max_length
        return quasiperiodicity.detect_quasiperiods_stream(stream, n, max_length, budget=self.budget)

    def prefix(self, stream: WordStream, n: int = None) -> str:
        return core_words.stream_prefix_text(stream, self.prefix_length if n is None else n, self.budget)


class Expect:
    """Collects expectation outcomes for one check."""

    MAX_REPORTED = 5

    def __init__(self):
        self.total = 0
        self.failures: List[str] = []

    def that(self, condition, message: str) -> bool:
        self.total += 1
        if not condition:
            self.failures.append(message)
        return bool(condition)

    def equal(self, actual, expected, label: str) -> bool:
        return self.that(actual == expected, f'{label}: expected {expected!r}, got {actual!r}')

    def raises(self, error_type, func, *args, label: str = '') -> bool:
        try:
            func(*args)
        except error_type:
            return self.that(True, label)
        except Exception as e:
            return self.that(False, f'{label}: expected {error_type.__name__}, got {type(e).__name__}')
        return self.that(False, f'{label}: expected {error_type.__name__}, nothing raised')

    def outcome(self):
        if self.failures:
            shown = '; '.join(self.failures[:self.MAX_REPORTED])
            more = len(self.failures) - self.MAX_REPORTED
            suffix = f' (+{more} more)' if more > 0 else ''
            return False, f'{len(self.failures)} of {self.total} expectations failed: {shown}{suffix}'
        return True, f'{self.total} expectations held'


@dataclass
class Check:
    id: str
    description: str
    func: Callable[[HarnessContext, Expect], None]


SUITES: Dict[str, List[Check]] = {}


def check(suite: str, check_id: str, description: str):
    def decorator(func):
        SUITES.setdefault(suite, []).append(Check(check_id, description, func))
        return func
    return decorator


def words_up_to(max_length: int, min_length: int = 1) -> Iterator[str]:
    for length in range(min_length, max_length + 1):
        for letters in itertools.product('ab', repeat=length):
            yield ''.join(letters)


def generator_words_up_to(max_length: int, alphabet=FOUR_GENERATORS,
                          min_length: int = 1) -> Iterator[GeneratorWord]:
    for length in range(min_length, max_length + 1):
        for gens in itertools.product(alphabet, repeat=length):
            yield GeneratorWord(gens)


def random_generator_word(rng: np.random.Generator, max_length: int, alphabet=ALL_GENERATORS) -> GeneratorWord:
    length = int(rng.integers(0, max_length + 1))
    return GeneratorWord(tuple(alphabet[int(i)] for i in rng.integers(0, len(alphabet), size=length)))


def random_word(rng: np.random.Generator, min_length: int, max_length: int) -> str:
    length = int(rng.integers(min_length, max_length + 1))
    return ''.join('ab'[int(i)] for i in rng.integers(0, 2, size=length))


def single_pair_family() -> List[DirectiveSequence]:
    """Valid sequences with empty preperiod and one period pair, d in {1, 2}."""
    blocks = [(d, c) for d in (1, 2) for c in range(d + 1)]
    family = []
    for a_block, b_block in itertools.product(blocks, repeat=2):
        seq = DirectiveSequence.from_pairs((), ((a_block, b_block),))
        if sturmian.validate_directive(seq) is None:
            family.append(seq)
    return family


def directive_streams() -> List[Directive]:
    sequences = single_pair_family() + [parse_directive(text) for text in EXTRA_DIRECTIVES]
    return [Directive(seq) for seq in sequences]


def image_of(gw: GeneratorWord, stream: WordStream) -> MorphicImage:
    return MorphicImage(morphisms.morphism_of(gw), stream, gw)


def stock_streams() -> List[WordStream]:
    return [FIBONACCI, THUE_MORSE, ABA_OMEGA, BA_OMEGA, A_OMEGA] + directive_streams()


def aperiodic_streams() -> List[WordStream]:
    return [FIBONACCI, THUE_MORSE] + directive_streams()


def gw(text: str) -> GeneratorWord:
    return parse_generator_word(text)


# core-words

@check('core-words', 'CW-1', 'parsing, matching, borders, balance and letter counts on fixed examples')
def core_examples(ctx: HarnessContext, expect: Expect):
    expect.equal(core_words.parse_word('aba').letters, 'aba', 'parse aba')
    expect.equal(core_words.parse_word('').letters, '', 'parse empty')
    try:
        core_words.parse_word('abc')
        expect.that(False, 'abc should be rejected')
    except InvalidCharacter as e:
        expect.equal(e.position, 2, 'invalid character position')
    expect.equal(core_words.occurrences('aba', 'ababa'), [0, 2], 'occurrences aba/ababa')
    expect.equal(core_words.occurrences('a', 'aaa'), [0, 1, 2], 'occurrences a/aaa')
    expect.equal(core_words.occurrences('ab', 'ba'), [], 'occurrences ab/ba')
    expect.raises(EmptyPattern, core_words.occurrences, '', 'ab', label='empty pattern')
    borders = [b.letters for b in core_words.proper_borders('abaababaabaababaaba')]
    for expected in ('aba', 'abaaba', 'abaababaaba'):
        expect.that(expected in borders, f'{expected} is a border of the golden word')
    expect.equal([b.letters for b in core_words.proper_borders('aaa')], ['a', 'aa'], 'borders aaa')
    expect.equal(core_words.proper_borders('ab'), [], 'borders ab')
    expect.equal(core_words.proper_borders(''), [], 'borders of the empty word')
    expect.equal(core_words.is_balanced('abaababa'), True, 'abaababa balanced')
    expect.equal(core_words.is_balanced('ababaaa'), False, 'ababaaa balanced')
    expect.equal(core_words.is_balanced('aabb'), False, 'aabb balanced')
    expect.equal(core_words.is_balanced(''), True, 'empty word balanced')
    expect.equal(core_words.count_letter('aba', 'a'), 2, 'count a')
    expect.equal(core_words.count_letter('aba', 'b'), 1, 'count b')
    expect.equal(core_words.count_letter('', 'a'), 0, 'count on empty')
    expect.equal(ctx.prefix(THUE_MORSE, 8), 'abbabaab', 'Thue-Morse prefix')
    expect.equal(ctx.prefix(FIBONACCI, 8), 'abaababa', 'Fibonacci prefix')
    expect.equal(ctx.prefix(ABA_OMEGA, 5), 'abaaa', 'periodic prefix')


@check('core-words', 'CW-2', 'linear-time matcher agrees with the quadratic scan')
def occurrences_oracle(ctx: HarnessContext, expect: Expect):
    patterns = list(words_up_to(4))
    for text in words_up_to(10):
        for pattern in patterns:
            expect.that(
                core_words.occurrences(pattern, text) == core_words.occurrences_naive(pattern, text),
                f'occurrences({pattern}, {text})',
            )
    rng = ctx.rng()
    for _ in range(3000):
        text = random_word(rng, 1, 14)
        pattern = random_word(rng, 1, 14)
        expect.that(
            core_words.occurrences(pattern, text) == core_words.occurrences_naive(pattern, text),
            f'occurrences({pattern}, {text})',
        )


@check('core-words', 'CW-3', 'proper borders are shorter prefixes and suffixes')
def borders_are_prefix_and_suffix(ctx: HarnessContext, expect: Expect):
    for text in words_up_to(12):
        for border in core_words.proper_borders(text):
            expect.that(
                0 < len(border) < len(text)
                and text.startswith(border.letters) and text.endswith(border.letters),
                f'border {border} of {text}',
            )


@check('core-words', 'CW-4', 'stream prefixes are monotone up to length 512')
def stream_prefixes_monotone(ctx: HarnessContext, expect: Expect):
    streams = [
        FIBONACCI, THUE_MORSE, ABA_OMEGA, A_OMEGA, LA_RB_STREAM, LB_RA_STREAM,
        parse_stream_spec('fixedpoint:a=aab,b=ba'),
        parse_stream_spec('image:La,Rb@fibonacci'),
        parse_stream_spec('image:a=abab,b=aaaa@directive:pre=[]per=[(2,1)(1,0)]'),
    ]
    for stream in streams:
        longest = ctx.prefix(stream, 512)
        for n in range(1, 512):
            expect.that(ctx.prefix(stream, n) == longest[:n], f'prefix {n} of {stream}')


@check('core-words', 'CW-5', 'Thue-Morse prefixes up to 2048 letters are overlap-free')
def thue_morse_overlap_free(ctx: HarnessContext, expect: Expect):
    prefix = ctx.prefix(THUE_MORSE, 2048)
    expect.that(quasiperiodicity.is_overlap_free(prefix), 'Thue-Morse prefix 2048 overlap-free')
    for n in (8, 64, 333, 1024):
        expect.that(quasiperiodicity.is_overlap_free(prefix[:n]), f'Thue-Morse prefix {n} overlap-free')


@check('core-words', 'CW-6', 'Fibonacci as a fixed point and as a directive limit agree to 512 letters')
def fibonacci_two_ways(ctx: HarnessContext, expect: Expect):
    fixed = ctx.prefix(parse_stream_spec('fixedpoint:a=ab,b=a'), 512)
    directive = ctx.prefix(parse_stream_spec('directive:per=[(1,0)(1,0)]'), 512)
    expect.equal(directive, fixed, 'Fibonacci constructions')


# quasiperiodicity

@check('quasiperiodicity', 'QP-1', 'covering, quasiperiods, superprimitivity and overlaps on fixed examples')
def quasiperiod_examples(ctx: HarnessContext, expect: Expect):
    golden = 'abaababaabaababaaba'
    expect.equal(quasiperiodicity.covers('aba', golden), True, 'aba covers the golden word')
    expect.equal(quasiperiodicity.covers('aba', 'ababa'), True, 'aba covers ababa')
    expect.equal(quasiperiodicity.covers('ab', 'aba'), False, 'ab covers aba')
    expect.equal(quasiperiodicity.covered_prefix_length('aba', 'abaababa'), 8, 'chain aba/abaababa')
    expect.equal(quasiperiodicity.covered_prefix_length('aba', 'abba'), 0, 'chain aba/abba')
    expect.equal(quasiperiodicity.covered_prefix_length('a', 'aab'), 2, 'chain a/aab')
    expect.equal([q.letters for q in quasiperiodicity.quasiperiods(golden)],
                 ['aba', 'abaaba', 'abaababaaba'], 'golden quasiperiods')
    expect.equal([q.letters for q in quasiperiodicity.quasiperiods('aa')], ['a'], 'quasiperiods aa')
    expect.equal(quasiperiodicity.quasiperiods('ab'), [], 'quasiperiods ab')
    expect.equal(quasiperiodicity.is_superprimitive('aba'), True, 'aba superprimitive')
    expect.equal(quasiperiodicity.is_superprimitive(golden), False, 'golden word superprimitive')
    expect.equal(quasiperiodicity.is_superprimitive('a'), True, 'a superprimitive')
    expect.equal(str(quasiperiodicity.smallest_quasiperiod(golden)), 'aba', 'golden smallest')
    expect.equal(str(quasiperiodicity.smallest_quasiperiod('ababa')), 'aba', 'ababa smallest')
    expect.equal(quasiperiodicity.smallest_quasiperiod('baa'), None, 'baa smallest')
    expect.equal(quasiperiodicity.is_overlap_free('abbabaab'), True, 'abbabaab overlap-free')
    expect.equal(quasiperiodicity.is_overlap_free('aaa'), False, 'aaa overlap-free')
    expect.equal(quasiperiodicity.is_overlap_free('ababa'), False, 'ababa overlap-free')


@check('quasiperiodicity', 'QP-2', 'border filter agrees with the positional oracle on every word up to 14 letters')
def quasiperiod_oracle(ctx: HarnessContext, expect: Expect):
    for text in words_up_to(14):
        expect.that(
            quasiperiodicity.quasiperiods(text) == quasiperiodicity.naive_quasiperiods(text),
            f'quasiperiods({text})',
        )


@check('quasiperiodicity', 'QP-3', 'a quasiperiodic word has exactly one superprimitive quasiperiod, its smallest')
def superprimitive_uniqueness(ctx: HarnessContext, expect: Expect):
    for text in words_up_to(14):
        found = quasiperiodicity.quasiperiods(text)
        if not found:
            continue
        superprimitive = [q for q in found if quasiperiodicity.is_superprimitive(q)]
        expect.that(superprimitive == found[:1], f'superprimitive quasiperiods of {text}')


@check('quasiperiodicity', 'QP-4', 'a generator image of a u-quasiperiodic word is covered by the image of u')
def quasiperiods_transport(ctx: HarnessContext, expect: Expect):
    images = {g: morphisms.generator_image(g) for g in FOUR_GENERATORS}
    for text in words_up_to(10):
        for u in quasiperiodicity.quasiperiods(text):
            for g, m in images.items():
                image_w = morphisms.apply(m, text)
                image_u = morphisms.apply(m, u)
                covered = quasiperiodicity.covered_prefix_length(image_u, image_w)
                expect.that(covered >= len(image_w) - len(image_u), f'{g}({u}) on {g}({text})')


@check('quasiperiodicity', 'QP-5', 'the square of the smallest evidence quasiperiod occurs in the prefix')
def square_of_quasiperiod(ctx: HarnessContext, expect: Expect):
    for stream in stock_streams():
        report = ctx.detect(stream)
        if report.smallest is None:
            continue
        u = report.smallest.letters
        expect.that((u + u) in ctx.prefix(stream), f'{u}{u} in prefix of {stream}')


@check('quasiperiodicity', 'QP-6', 'prefixes with quasiperiod evidence are never overlap-free')
def evidence_implies_overlap(ctx: HarnessContext, expect: Expect):
    for stream in stock_streams():
        n = min(ctx.prefix_length, 2048)
        report = ctx.detect(stream, n)
        if report.verdict is Verdict.EVIDENCE_QUASIPERIODIC:
            expect.that(not quasiperiodicity.is_overlap_free(ctx.prefix(stream, n)),
                        f'overlap in prefix of {stream}')


@check('quasiperiodicity', 'QP-7', 'prefixes longer than an evidence quasiperiod are bordered')
def evidence_implies_bordered(ctx: HarnessContext, expect: Expect):
    for stream in stock_streams():
        report = ctx.detect(stream)
        if report.smallest is None:
            continue
        fail = core_words.failure_function(ctx.prefix(stream))
        shortest = len(report.smallest)
        covered = report.found[0].covered_length
        unbordered = [k for k in range(shortest + 1, covered + 1) if fail[k - 1] == 0]
        expect.that(not unbordered, f'unbordered prefixes {unbordered[:3]} of {stream}')


# lyndon

@check('lyndon', 'LY-1', 'Lyndon membership, unborderedness and prefix status on fixed examples')
def lyndon_examples(ctx: HarnessContext, expect: Expect):
    ab, ba = LetterOrder.A_BEFORE_B, LetterOrder.B_BEFORE_A
    expect.equal(lyndon.is_lyndon('aab', ab), True, 'aab Lyndon a<b')
    expect.equal(lyndon.is_lyndon('aba', ab), False, 'aba Lyndon a<b')
    expect.equal(lyndon.is_lyndon('ba', ba), True, 'ba Lyndon b<a')
    expect.equal(lyndon.is_unbordered('aab'), True, 'aab unbordered')
    expect.equal(lyndon.is_unbordered('ababa'), False, 'ababa unbordered')
    expect.equal(lyndon.is_unbordered('a'), True, 'a unbordered')
    expect.that(lyndon.lyndon_prefix_status(LA_RB_STREAM, 64, ab, ctx.budget).is_consistent,
                '(La Rb) limit consistent under a<b')
    status = lyndon.lyndon_prefix_status(FIBONACCI, 64, ab)
    expect.equal(status.outcome, LyndonOutcome.REFUTED, 'Fibonacci refuted under a<b')
    expect.that(lyndon.lyndon_prefix_status(A_OMEGA, 64, ab).is_consistent, 'a^ω consistent')
    expect.equal(lyndon.preserves_lyndon(gw('La Rb')), True, 'La Rb preserves Lyndon')
    expect.equal(lyndon.preserves_lyndon(gw('La Lb')), False, 'La Lb preserves Lyndon')
    expect.equal(lyndon.preserves_lyndon(gw('Ra Rb La')), False, 'Ra Rb La preserves Lyndon')
    expect.equal(lyndon.preserves_lyndon(gw('Lb Ra'), ba), True, 'Lb Ra preserves Lyndon under b<a')


@check('lyndon', 'LY-2', 'finite Lyndon words are unbordered and superprimitive')
def lyndon_unbordered_superprimitive(ctx: HarnessContext, expect: Expect):
    for text in words_up_to(12):
        for order in LetterOrder:
            if lyndon.is_lyndon(text, order):
                expect.that(lyndon.is_unbordered(text), f'{text} unbordered ({order.symbol})')
                expect.that(quasiperiodicity.is_superprimitive(text), f'{text} superprimitive ({order.symbol})')


@check('lyndon', 'LY-3', 'Lyndon test agrees with letter-by-letter suffix comparison')
def lyndon_oracle(ctx: HarnessContext, expect: Expect):
    for text in words_up_to(12):
        for order in LetterOrder:
            expect.that(lyndon.is_lyndon(text, order) == lyndon.is_lyndon_naive(text, order),
                        f'{text} under {order.symbol}')


@check('lyndon', 'LY-4', 'exchanging letters swaps the two orders')
def lyndon_order_symmetry(ctx: HarnessContext, expect: Expect):
    for text in words_up_to(12):
        exchanged = FiniteWord(text).exchanged()
        expect.that(
            lyndon.is_lyndon(text, LetterOrder.A_BEFORE_B) == lyndon.is_lyndon(exchanged, LetterOrder.B_BEFORE_A),
            f'{text} against {exchanged}',
        )


@check('lyndon', 'LY-5', 'only La and Rb preserve Lyndon words, uniformly over each rewriting class')
def lyndon_preservation_classes(ctx: HarnessContext, expect: Expect):
    for g in ALL_GENERATORS:
        single = GeneratorWord((g,))
        expect.equal(lyndon.preserves_lyndon(single, cap=ctx.cap), g in (Generator.LA, Generator.RB), f'[{g}]')
    for word in generator_words_up_to(5):
        verdict = lyndon.preserves_lyndon(word, cap=ctx.cap)
        for member in morphisms.relation_closure(word, cap=ctx.cap):
            expect.that(lyndon.preserves_lyndon(member, cap=ctx.cap) == verdict, f'{member} against {word}')


# relations

@check('relations', 'RE-1', 'generator images, composition, normalization and closure on fixed examples')
def relation_examples(ctx: HarnessContext, expect: Expect):
    def images(m: BinaryMorphism):
        return m.image_a.letters, m.image_b.letters

    expect.equal(images(morphisms.generator_image(Generator.LA)), ('a', 'ab'), 'La')
    expect.equal(images(morphisms.generator_image(Generator.RB)), ('ab', 'b'), 'Rb')
    expect.equal(images(morphisms.generator_image(Generator.E)), ('b', 'a'), 'E')
    expect.equal(morphisms.apply(morphisms.generator_image(Generator.LA), 'ab').letters, 'aab', 'La(ab)')
    expect.equal(morphisms.apply(morphisms.generator_image(Generator.E), 'ab').letters, 'ba', 'E(ab)')
    expect.equal(morphisms.apply(morphisms.generator_image(Generator.LB), '').letters, '', 'image of empty')
    expect.equal(images(morphisms.morphism_of(gw('La Lb'))), ('aba', 'ab'), 'La Lb')
    expect.equal(images(morphisms.morphism_of(gw('La Ra'))), ('a', 'aba'), 'La Ra')
    expect.equal(images(morphisms.morphism_of(gw('Ra La La Rb'))), ('aaaba', 'aaba'), 'Ra La La Rb')
    expect.equal(images(morphisms.morphism_of(GeneratorWord())), ('a', 'b'), 'identity')
    expect.equal(morphisms.morphisms_equal(gw('La Lb Ra'), gw('Ra Rb La')), True, 'La Lb Ra = Ra Rb La')
    expect.equal(morphisms.morphisms_equal(gw('La Ra'), gw('Ra La')), True, 'La Ra = Ra La')
    expect.equal(morphisms.morphisms_equal(gw('La'), gw('Ra')), False, 'La = Ra')
    expect.equal(morphisms.normalize_E(gw('E La')).to_dict(), {'core': ['Lb'], 'flip': True}, 'normalize E La')
    expect.equal(morphisms.normalize_E(gw('E E')).to_dict(), {'core': [], 'flip': False}, 'normalize E E')
    expect.equal(morphisms.normalize_E(gw('La E Ra')).to_dict(), {'core': ['La', 'Rb'], 'flip': True},
                 'normalize La E Ra')
    expect.equal(set(morphisms.relation_closure(gw('La Ra'))), {gw('La Ra'), gw('Ra La')}, 'closure La Ra')
    expect.equal(set(morphisms.relation_closure(gw('La Rb'))), {gw('La Rb')}, 'closure La Rb')
    expect.equal(set(morphisms.relation_closure(gw('La Lb Ra'))), {gw('La Lb Ra'), gw('Ra Rb La')},
                 'closure La Lb Ra')


@check('relations', 'RE-2', 'the defining relations hold as equalities of letter images')
def presentation_soundness(ctx: HarnessContext, expect: Expect):
    la, lb, ra, rb, e = Generator.LA, Generator.LB, Generator.RA, Generator.RB, Generator.E
    for n in range(6):
        expect.that(morphisms.morphisms_equal(GeneratorWord((la,) + (lb,) * n + (ra,)),
                                              GeneratorWord((ra,) + (rb,) * n + (la,))), f'La Lb^{n} Ra')
        expect.that(morphisms.morphisms_equal(GeneratorWord((lb,) + (la,) * n + (rb,)),
                                              GeneratorWord((rb,) + (ra,) * n + (lb,))), f'Lb La^{n} Rb')
    expect.that(morphisms.morphism_of(GeneratorWord((e, e))) == BinaryMorphism.identity(), 'E E = Id')
    expect.that(morphisms.morphisms_equal(GeneratorWord((e, la)), GeneratorWord((lb, e))), 'E La = Lb E')
    expect.that(morphisms.morphisms_equal(GeneratorWord((e, ra)), GeneratorWord((rb, e))), 'E Ra = Rb E')


@check('relations', 'RE-3', 'E-normalization preserves the morphism')
def normalization_sound(ctx: HarnessContext, expect: Expect):
    rng = ctx.rng()
    for _ in range(1000):
        word = random_generator_word(rng, 8)
        normalized = morphisms.normalize_E(word)
        expect.that(not normalized.core.has_e, f'{word} core is E-free')
        expect.that(morphisms.morphisms_equal(word, normalized.as_generator_word()), f'normalize {word}')


@check('relations', 'RE-4', 'closure classes are sound, symmetric and length-preserving')
def closure_classes(ctx: HarnessContext, expect: Expect):
    for word in generator_words_up_to(6):
        members = morphisms.relation_closure(word, cap=ctx.cap)
        target = morphisms.morphism_of(word)
        member_set = set(members)
        for member in members:
            expect.that(len(member) == len(word), f'{member} length against {word}')
            expect.that(morphisms.morphism_of(member) == target, f'{member} equals {word}')
            expect.that(set(morphisms.relation_closure(member, cap=ctx.cap)) == member_set,
                        f'closure of {member} against {word}')


@check('relations', 'RE-5', 'equal letter images coincide with equal rewriting classes')
def word_problem_two_ways(ctx: HarnessContext, expect: Expect):
    by_morphism = defaultdict(set)
    for word in generator_words_up_to(5):
        by_morphism[morphisms.morphism_of(word)].add(word)
    for group in by_morphism.values():
        sample = next(iter(group))
        expect.that(set(morphisms.relation_closure(sample, cap=ctx.cap)) == group,
                    f'class of {sample} has {len(group)} spellings')


@check('relations', 'RE-6', 'morphism images distribute over concatenation')
def apply_distributes(ctx: HarnessContext, expect: Expect):
    rng = ctx.rng()
    for _ in range(500):
        m = morphisms.morphism_of(random_generator_word(rng, 6))
        text = random_word(rng, 0, 20)
        cut = int(rng.integers(0, len(text) + 1))
        whole = morphisms.apply(m, text)
        expect.that(whole == morphisms.apply(m, text[:cut]) + morphisms.apply(m, text[cut:]),
                    f'{m} on {text} split at {cut}')
        expected_length = (text.count('a') * len(m.image_a) + text.count('b') * len(m.image_b))
        expect.that(len(whole) == expected_length, f'{m} image length on {text}')


# sturmian

@check('sturmian', 'ST-1', 'validation, expansion, generation, decision and shape on fixed examples')
def sturmian_examples(ctx: HarnessContext, expect: Expect):
    fibonacci = parse_directive('per=[(1,0)(1,0)]')
    la_rb = parse_directive('per=[(1,0)(1,1)]')
    lb_ra = parse_directive('pre=[(0,0)(1,0)]per=[(1,1)(1,0)]')

    expect.equal(sturmian.validate_directive(la_rb), None, 'per (1,0)(1,1) valid')
    violation = sturmian.validate_directive(parse_directive('per=[(1,1)(1,1)]'))
    expect.that(violation is not None and violation.block_index == 2, f'per (1,1)(1,1): {violation}')
    violation = sturmian.validate_directive(parse_directive('per=[(1,0)(0,0)]'))
    expect.that(violation is not None and violation.block_index == 2, f'per (1,0)(0,0): {violation}')
    expect.raises(DirectiveViolation, sturmian.sturmian_prefix, parse_directive('per=[(1,1)(1,1)]'), 4,
                  label='invalid sequence refused')

    expect.equal(str(sturmian.directive_to_generators(fibonacci, 1)), 'La Lb', 'expand standard pair')
    expect.equal(str(sturmian.directive_to_generators(la_rb, 1)), 'La Rb', 'expand (1,0)(1,1)')
    expect.equal(str(sturmian.directive_to_generators(lb_ra, 2)), 'Lb Ra Lb', 'expand with empty first block')

    expect.equal(sturmian.sturmian_prefix(fibonacci, 8, ctx.budget).letters, 'abaababa', 'Fibonacci prefix')
    expect.equal(sturmian.sturmian_prefix(lb_ra, 6, ctx.budget).letters, 'bbabba', '(Lb Ra) limit prefix')
    expect.equal(sturmian.sturmian_prefix(la_rb, 6, ctx.budget).letters, 'aabaab', '(La Rb) limit prefix')

    expect.equal(sturmian.is_standard(fibonacci), True, 'standard')
    expect.equal(sturmian.is_standard(la_rb), False, 'not standard')
    expect.equal(sturmian.is_standard(parse_directive('pre=[(2,0)(3,0)]per=[(1,0)(1,0)]')), True,
                 'standard with preperiod')

    expect.equal(sturmian.is_nonquasiperiodic(fibonacci), False, 'standard words are quasiperiodic')
    expect.equal(sturmian.is_nonquasiperiodic(la_rb), True, '{La, Rb} family')
    expect.equal(sturmian.is_nonquasiperiodic(lb_ra), True, '{Lb, Ra} family')
    expect.equal(sturmian.is_nonquasiperiodic(parse_directive('per=[(2,1)(1,0)]')), False, 'partial block')
    expect.equal(sturmian.decide(la_rb).lyndon_order, LetterOrder.A_BEFORE_B, 'order for {La, Rb}')
    expect.equal(sturmian.decide(lb_ra).lyndon_order, LetterOrder.B_BEFORE_A, 'order for {Lb, Ra}')

    shape = sturmian.check_shape('abaab')
    expect.equal((shape.conforms, shape.i, shape.n, str(shape.predicted_quasiperiod)),
                 (True, 1, 2, 'abaa'), 'shape abaab')
    shape = sturmian.check_shape('abaababaab')
    expect.equal((shape.i, shape.n, str(shape.predicted_quasiperiod)), (1, 1, 'aba'), 'shape of a Fibonacci prefix')
    expect.equal(sturmian.check_shape('aaabab').conforms, False, 'shape aaabab')
    shape = sturmian.check_shape('babab')
    expect.equal((shape.conforms, shape.i, shape.n, shape.predicted_quasiperiod), (True, 0, 1, None), 'shape babab')
    expect.raises(TooFewBs, sturmian.check_shape, 'aaba', label='one b')


@check('sturmian', 'ST-2', 'common prefixes of successive directive images never shrink')
def generation_converges(ctx: HarnessContext, expect: Expect):
    for stream in directive_streams():
        trace = sturmian.generation_trace(stream.seq, 12, limit=ctx.prefix_length)
        expect.that(all(x <= y for x, y in zip(trace, trace[1:])), f'trace {trace} for {stream}')


@check('sturmian', 'ST-3', 'generated Sturmian prefixes are balanced')
def generated_prefixes_balanced(ctx: HarnessContext, expect: Expect):
    for stream in directive_streams():
        expect.that(core_words.is_balanced(ctx.prefix(stream, min(ctx.prefix_length, 2000))),
                    f'{stream} balanced')


@check('sturmian', 'ST-4', 'Lx Rx images of Sturmian words are quasiperiodic')
def commuting_pair_images(ctx: HarnessContext, expect: Expect):
    for stream in directive_streams():
        for pair in ('La Ra', 'Lb Rb'):
            report = ctx.detect(image_of(gw(pair), stream))
            expect.equal(report.verdict, Verdict.EVIDENCE_QUASIPERIODIC, f'{pair} image of {stream}')


@check('sturmian', 'ST-5', 'La Lb images are aba-quasiperiodic and Lb La images bab-quasiperiodic')
def standard_pair_images(ctx: HarnessContext, expect: Expect):
    for stream in stock_streams():
        expect.that('aba' in ctx.detect(image_of(gw('La Lb'), stream)).quasiperiods, f'La Lb image of {stream}')
        expect.that('bab' in ctx.detect(image_of(gw('Lb La'), stream)).quasiperiods, f'Lb La image of {stream}')


@check('sturmian', 'ST-6', 'La and Rb carry the smallest quasiperiod of Sturmian words starting with a')
def smallest_quasiperiod_transport(ctx: HarnessContext, expect: Expect):
    for stream in directive_streams():
        if sturmian.is_nonquasiperiodic(stream.seq) or ctx.prefix(stream, 1) != 'a':
            continue
        smallest = ctx.detect(stream).smallest
        if not expect.that(smallest is not None, f'evidence for {stream}'):
            continue
        for name in ('La', 'Rb'):
            g = gw(name)
            image_smallest = ctx.detect(image_of(g, stream)).smallest
            expected = morphisms.apply(morphisms.morphism_of(g), smallest)
            expect.equal(image_smallest, expected, f'smallest quasiperiod of {name} image of {stream}')


@check('sturmian', 'ST-7', 'an unbalanced word shows the balance hypothesis is needed')
def unbalanced_counterexample(ctx: HarnessContext, expect: Expect):
    stream = parse_stream_spec('periodic:abab,aaab')
    expect.equal(ctx.detect(stream).verdict, Verdict.NO_QUASIPERIOD_DETECTED, 'abab(aaab)^ω')
    expect.equal(str(ctx.detect(image_of(gw('La'), stream)).smallest), 'aabaa', 'La image of abab(aaab)^ω')


# classify

CLASSIFICATION_TABLE = (
    ('La Lb', Classification.STRONGLY_QUASIPERIODIC),
    ('Lb La', Classification.STRONGLY_QUASIPERIODIC),
    ('La Ra', Classification.WEAKLY_QUASIPERIODIC),
    ('Lb Rb', Classification.WEAKLY_QUASIPERIODIC),
    ('Ra Rb Ra', Classification.STRONGLY_QUASIPERIODIC),
    ('Ra La Rb', Classification.STRONGLY_QUASIPERIODIC),
    ('La', Classification.WEAKLY_QUASIPERIODIC),
    ('Rb', Classification.WEAKLY_QUASIPERIODIC),
    ('La Rb', Classification.WEAKLY_QUASIPERIODIC),
    ('E', Classification.QUASIPERIOD_FREE),
    ('', Classification.QUASIPERIOD_FREE),
)

ON_STURMIAN_TABLE = (
    ('La Ra', OnSturmianClassification.STRONGLY_ON_STURMIAN),
    ('La Rb', OnSturmianClassification.WEAKLY_ON_STURMIAN),
    ('La', OnSturmianClassification.WEAKLY_ON_STURMIAN),
    ('La Lb', OnSturmianClassification.STRONGLY_ON_STURMIAN),
    ('E', OnSturmianClassification.QUASIPERIOD_FREE),
)

WEAK_FAMILIES = (
    (re.compile(r'[AD]*[AC]*'), ABA_OMEGA),
    (re.compile(r'[BC]*[BD]*'), BAB_OMEGA),
)


def weak_witness_input(word: GeneratorWord, cap: int) -> Optional[WordStream]:
    """aba^ω for the {La,Rb}*{La,Ra}* family, bab^ω for {Lb,Ra}*{Lb,Rb}*."""
    for member in morphisms.closure_codes(word.code, cap):
        for pattern, stream in WEAK_FAMILIES:
            if pattern.fullmatch(member):
                return stream
    return None


@check('classify', 'CL-1', 'classification table, shapes and witnesses on fixed examples')
def classification_examples(ctx: HarnessContext, expect: Expect):
    for text, expected in CLASSIFICATION_TABLE:
        expect.equal(classify_service.classify(gw(text), cap=ctx.cap), expected, f'classify [{text}]')
    for text, expected in ON_STURMIAN_TABLE:
        expect.equal(classify_service.classify_on_sturmian(gw(text), cap=ctx.cap), expected,
                     f'classify on Sturmian [{text}]')
    expect.equal(classify_service.shape_member(gw('La Ra'), Shape.WEAK_SHAPE), True, 'La Ra weak shape')
    expect.equal(classify_service.shape_member(gw('La Lb'), Shape.WEAK_SHAPE), False, 'La Lb weak shape')
    expect.equal(classify_service.shape_member(gw('Ra Rb La'), Shape.WEAK_SHAPE), False, 'Ra Rb La weak shape')

    witness = classify_service.forbidden_witness(gw('La Lb'))
    expect.that(witness is not None and witness.pattern_id is PatternId.P1
                and witness.split == (GeneratorWord(), gw('La Lb'), GeneratorWord()), f'La Lb witness {witness}')
    expect.equal(classify_service.forbidden_witness(gw('La Rb')), None, 'La Rb witness')
    witness = classify_service.forbidden_witness(gw('Ra Rb Ra'))
    expect.that(witness is not None and witness.pattern_id is PatternId.P3
                and witness.f2 == gw('Ra Rb Ra'), f'Ra Rb Ra witness {witness}')


@check('classify', 'CL-2', 'strong classification coincides with a forbidden pattern and respects equality')
def forbidden_pattern_equivalence(ctx: HarnessContext, expect: Expect):
    by_morphism = defaultdict(set)
    for word in generator_words_up_to(6):
        kind = classify_service.classify(word, cap=ctx.cap)
        witness = classify_service.forbidden_witness(word, cap=ctx.cap)
        expect.that((kind is Classification.STRONGLY_QUASIPERIODIC) == (witness is not None),
                    f'{word}: {kind.value} with witness {witness}')
        by_morphism[morphisms.morphism_of(word)].add(kind)
    for morphism, kinds in by_morphism.items():
        expect.that(len(kinds) == 1, f'{morphism} classified {sorted(k.value for k in kinds)}')


@check('classify', 'CL-3', 'strongly quasiperiodic morphisms give quasiperiodic images of non-quasiperiodic words')
def strong_images_quasiperiodic(ctx: HarnessContext, expect: Expect):
    for word in generator_words_up_to(4):
        if classify_service.classify(word, cap=ctx.cap) is not Classification.STRONGLY_QUASIPERIODIC:
            continue
        for stream in NON_QUASIPERIODIC_FIXTURES:
            expect.equal(ctx.detect(image_of(word, stream)).verdict, Verdict.EVIDENCE_QUASIPERIODIC,
                         f'{word} image of {stream}')


@check('classify', 'CL-4', 'weakly quasiperiodic morphisms keep some input non-quasiperiodic')
def weak_images(ctx: HarnessContext, expect: Expect):
    for word in generator_words_up_to(4):
        if classify_service.classify(word, cap=ctx.cap) is not Classification.WEAKLY_QUASIPERIODIC:
            continue
        witness_input = weak_witness_input(word, ctx.cap)
        if not expect.that(witness_input is not None, f'{word} lies in a weak family'):
            continue
        expect.equal(ctx.detect(image_of(word, witness_input)).verdict, Verdict.NO_QUASIPERIOD_DETECTED,
                     f'{word} image of {witness_input}')
        expect.equal(ctx.detect(image_of(word, FIBONACCI)).verdict, Verdict.EVIDENCE_QUASIPERIODIC,
                     f'{word} image of Fibonacci')


@check('classify', 'CL-5', 'morphisms strong on Sturmian words but weak overall')
def on_sturmian_strength(ctx: HarnessContext, expect: Expect):
    for word in generator_words_up_to(4):
        if classify_service.classify(word, cap=ctx.cap) is not Classification.WEAKLY_QUASIPERIODIC:
            continue
        on_sturmian = classify_service.classify_on_sturmian(word, cap=ctx.cap)
        if on_sturmian is not OnSturmianClassification.STRONGLY_ON_STURMIAN:
            continue
        for stream in NON_QUASIPERIODIC_STURMIAN:
            expect.equal(ctx.detect(image_of(word, stream)).verdict, Verdict.EVIDENCE_QUASIPERIODIC,
                         f'{word} image of {stream}')
        witness_input = weak_witness_input(word, ctx.cap)
        expect.equal(ctx.detect(image_of(word, witness_input)).verdict, Verdict.NO_QUASIPERIOD_DETECTED,
                     f'{word} image of {witness_input}')


@check('classify', 'CL-6', 'a strongly quasiperiodic factor makes the whole word strongly quasiperiodic')
def strong_factor_propagates(ctx: HarnessContext, expect: Expect):
    for word in generator_words_up_to(5):
        n = len(word)
        strong_factor = any(
            classify_service.classify(word[i:j], cap=ctx.cap) is Classification.STRONGLY_QUASIPERIODIC
            for i in range(n) for j in range(i + 1, n + 1)
        )
        if strong_factor:
            expect.equal(classify_service.classify(word, cap=ctx.cap), Classification.STRONGLY_QUASIPERIODIC,
                         f'{word}')


@check('classify', 'CL-7', 'composing with E on either side keeps both classifications')
def exchange_invariance(ctx: HarnessContext, expect: Expect):
    e = GeneratorWord((Generator.E,))
    rng = ctx.rng()
    for _ in range(300):
        word = random_generator_word(rng, 6)
        kind = classify_service.classify(word, cap=ctx.cap)
        on_sturmian = classify_service.classify_on_sturmian(word, cap=ctx.cap)
        for variant in (e + word, word + e):
            expect.equal(classify_service.classify(variant, cap=ctx.cap), kind, f'{variant} against {word}')
            expect.equal(classify_service.classify_on_sturmian(variant, cap=ctx.cap), on_sturmian,
                         f'{variant} on Sturmian against {word}')


# paper-examples

@check('paper-examples', 'PE-1', 'the 19-letter Fibonacci prefix has exactly three quasiperiods')
def golden_word(ctx: HarnessContext, expect: Expect):
    golden = 'abaababaabaababaaba'
    found = [q.letters for q in quasiperiodicity.quasiperiods(golden)]
    expect.equal(found, ['aba', 'abaaba', 'abaababaaba'], 'quasiperiods')
    expect.equal([q for q in found if quasiperiodicity.is_superprimitive(q)], ['aba'], 'superprimitive member')
    expect.that(quasiperiodicity.covers('aba', 'ababa'), 'ababa is aba-quasiperiodic')
    expect.that(all(quasiperiodicity.is_superprimitive(x) for x in 'ab'), 'single letters')


@check('paper-examples', 'PE-2', 'the Fibonacci word is aba-quasiperiodic')
def fibonacci_word(ctx: HarnessContext, expect: Expect):
    report = ctx.detect(FIBONACCI, 1000, 50)
    expect.equal(str(report.smallest), 'aba', 'smallest quasiperiod')
    expect.that('abaaba' in report.quasiperiods, 'abaaba also recorded')
    short = ctx.detect(FIBONACCI, 200, 12)
    expect.equal(str(short.smallest), 'aba', 'smallest on 200 letters')


@check('paper-examples', 'PE-3', '(ab)^n a (ab)^ω has exactly n quasiperiods')
def counted_quasiperiods(ctx: HarnessContext, expect: Expect):
    for n in range(1, 6):
        stream = parse_stream_spec(f'periodic:{"ab" * n}a,ab')
        report = ctx.detect(stream, 2000, 100)
        expect.equal(len(report.found), n, f'(ab)^{n} a (ab)^ω found {report.quasiperiods}')


@check('paper-examples', 'PE-4', 'the Thue-Morse word is overlap-free and shows no quasiperiod')
def thue_morse_word(ctx: HarnessContext, expect: Expect):
    expect.that(quasiperiodicity.is_overlap_free(ctx.prefix(THUE_MORSE, 2048)), 'overlap-free')
    expect.equal(ctx.detect(THUE_MORSE, 2048, 64).verdict, Verdict.NO_QUASIPERIOD_DETECTED, 'no evidence')
    expect.equal(ctx.detect(THUE_MORSE, 1024, 64).verdict, Verdict.NO_QUASIPERIOD_DETECTED, 'no evidence on 1024')


@check('paper-examples', 'PE-5', 'aba^ω, ba^ω and (Lb Ra)^ω(a) are not quasiperiodic')
def non_quasiperiodic_words(ctx: HarnessContext, expect: Expect):
    expect.equal(ctx.detect(ABA_OMEGA, 200, 12).verdict, Verdict.NO_QUASIPERIOD_DETECTED, 'aba^ω')
    expect.equal(ctx.detect(BA_OMEGA, 200, 12).verdict, Verdict.NO_QUASIPERIOD_DETECTED, 'ba^ω')
    expect.equal(ctx.detect(image_of(gw('La Ra'), BA_OMEGA)).verdict, Verdict.NO_QUASIPERIOD_DETECTED,
                 'La Ra image of ba^ω')
    expect.equal(ctx.prefix(image_of(gw('La Ra'), BA_OMEGA), 50), ctx.prefix(ABA_OMEGA, 50),
                 'La Ra(ba^ω) = aba^ω')
    expect.equal(ctx.detect(LB_RA_STREAM, 500, 30).verdict, Verdict.NO_QUASIPERIOD_DETECTED, '(Lb Ra)^ω(a)')


@check('paper-examples', 'PE-6', 'length-preserving rules for generators fail on Sturmian words starting with b')
def words_starting_with_b(ctx: HarnessContext, expect: Expect):
    expect.equal(ctx.prefix(LB_RA_STREAM, 1), 'b', '(Lb Ra)^ω(a) starts with b')
    expect.equal(str(ctx.detect(image_of(gw('La'), LB_RA_STREAM)).smallest), 'aba', 'La image')
    expect.equal(str(ctx.detect(image_of(gw('Rb'), LB_RA_STREAM)).smallest), 'bbab', 'Rb image')


@check('paper-examples', 'PE-7', 'single generators are quasiperiodic morphisms')
def single_generator_witnesses(ctx: HarnessContext, expect: Expect):
    ab_omega = parse_stream_spec('periodic:a,b')
    abab_omega = parse_stream_spec('periodic:aba,b')
    expect.equal(ctx.detect(BAB_OMEGA).verdict, Verdict.NO_QUASIPERIOD_DETECTED, 'bab^ω')
    expect.equal(ctx.detect(ab_omega).verdict, Verdict.NO_QUASIPERIOD_DETECTED, 'ab^ω')
    expect.equal(ctx.prefix(image_of(gw('La'), BAB_OMEGA), 9), 'abaababab', 'La(bab^ω) = aba(ab)^ω')
    expect.equal(str(ctx.detect(image_of(gw('La'), BAB_OMEGA)).smallest), 'aba', 'La image')
    expect.equal(ctx.detect(abab_omega).verdict, Verdict.NO_QUASIPERIOD_DETECTED, 'abab^ω')
    expect.equal(ctx.prefix(image_of(gw('Ra'), abab_omega), 9), 'abaababab', 'Ra(abab^ω) = aba(ab)^ω')
    expect.equal(str(ctx.detect(image_of(gw('Ra'), abab_omega)).smallest), 'aba', 'Ra image')
    expect.equal(str(ctx.detect(image_of(gw('Ra'), ab_omega)).smallest), 'ab', 'Ra(ab^ω) = (ab)^ω')
    expect.equal(morphisms.apply(morphisms.morphism_of(gw('La Rb')), 'a').letters, 'aab', 'La Rb(a)')
    expect.equal(morphisms.apply(morphisms.morphism_of(gw('Ra Rb')), 'a').letters, 'aba', 'Ra Rb(a)')


@check('paper-examples', 'PE-8', 'g: a->abab, b->aaaa is quasiperiod-free on the fixtures')
def quasiperiod_free_g(ctx: HarnessContext, expect: Expect):
    g = BinaryMorphism(FiniteWord('abab'), FiniteWord('aaaa'))
    for stream in NON_QUASIPERIODIC_FIXTURES:
        expect.equal(ctx.detect(MorphicImage(g, stream)).verdict, Verdict.NO_QUASIPERIOD_DETECTED,
                     f'g image of {stream}')
    _expect_cover_transport(ctx, expect, g, 'g')


@check('paper-examples', 'PE-9', 'h: a->a^i, b->b^j is quasiperiod-free on the fixtures')
def quasiperiod_free_h(ctx: HarnessContext, expect: Expect):
    for i, j in itertools.product((1, 2, 3), repeat=2):
        h = BinaryMorphism(FiniteWord('a' * i), FiniteWord('b' * j))
        for stream in NON_QUASIPERIODIC_FIXTURES:
            expect.equal(ctx.detect(MorphicImage(h, stream)).verdict, Verdict.NO_QUASIPERIOD_DETECTED,
                         f'h({i},{j}) image of {stream}')
        _expect_cover_transport(ctx, expect, h, f'h({i},{j})')


def _expect_cover_transport(ctx: HarnessContext, expect: Expect, m: BinaryMorphism, label: str):
    prefix = ctx.prefix(FIBONACCI, 500)
    covered = quasiperiodicity.covered_prefix_length('aba', prefix)
    image_u = morphisms.apply(m, 'aba')
    image_covered = quasiperiodicity.covered_prefix_length(image_u, morphisms.apply(m, prefix))
    expect.that(image_covered >= len(morphisms.apply(m, prefix[:covered])), f'{label} image of the aba chain')


@check('paper-examples', 'PE-10', 'an unbalanced prefix breaks both Lyndon orders without creating a quasiperiod')
def unbalanced_prefix(ctx: HarnessContext, expect: Expect):
    for stream in (FIBONACCI, LA_RB_STREAM, LB_RA_STREAM):
        text = 'ababaaa' + ctx.prefix(stream)
        expect.equal(quasiperiodicity.detect_quasiperiods_text(text, ctx.max_quasiperiod).verdict,
                     Verdict.NO_QUASIPERIOD_DETECTED, f'ababaaa·{stream}')
        for order in LetterOrder:
            expect.equal(lyndon.lyndon_status_text(text, order).outcome, LyndonOutcome.REFUTED,
                         f'ababaaa·{stream} under {order.symbol}')


@check('paper-examples', 'PE-11', 'bordered prefixes alone do not give a quasiperiod')
def bordered_without_quasiperiod(ctx: HarnessContext, expect: Expect):
    for stream, shortest in ((ABA_OMEGA, 3), (THUE_MORSE, 4)):
        fail = core_words.failure_function(ctx.prefix(stream))
        expect.that(all(fail[k - 1] > 0 for k in range(shortest, len(fail) + 1)),
                    f'prefixes of {stream} from length {shortest} are bordered')
        expect.equal(ctx.detect(stream).verdict, Verdict.NO_QUASIPERIOD_DETECTED, f'{stream}')


# cross-theorems

@check('cross-theorems', 'CT-1', 'exact decision, quasiperiod evidence and Lyndon status agree on one-pair sequences')
def three_way_agreement(ctx: HarnessContext, expect: Expect):
    n = max(ctx.prefix_length, 5000)
    for seq in single_pair_family():
        stream = Directive(seq)
        decision = sturmian.decide(seq)
        prefix = ctx.prefix(stream, n)
        evidence = quasiperiodicity.detect_quasiperiods_text(prefix, ctx.max_quasiperiod)
        statuses = {order: lyndon.lyndon_status_text(prefix, order) for order in LetterOrder}
        if decision.verdict is Verdict.EXACT_NON_QUASIPERIODIC:
            expect.equal(evidence.verdict, Verdict.NO_QUASIPERIOD_DETECTED, f'evidence for {stream}')
            expect.that(statuses[decision.lyndon_order].is_consistent,
                        f'{stream} Lyndon under {decision.lyndon_order.symbol}')
        else:
            expect.equal(evidence.verdict, Verdict.EVIDENCE_QUASIPERIODIC, f'evidence for {stream}')
            for order, status in statuses.items():
                expect.equal(status.outcome, LyndonOutcome.REFUTED, f'{stream} under {order.symbol}')


@check('cross-theorems', 'CT-2', 'Sturmian prefixes fit the run shape and its predicted quasiperiod')
def run_shape_agreement(ctx: HarnessContext, expect: Expect):
    for stream in directive_streams():
        prefix = ctx.prefix(stream)
        try:
            shape = sturmian.check_shape(prefix)
        except TooFewBs:
            continue
        expect.that(shape.conforms, f'{stream} conforms')
        if sturmian.is_nonquasiperiodic(stream.seq):
            expect.equal(shape.predicted_quasiperiod, None, f'{stream} has no predicted quasiperiod')
        elif shape.predicted_quasiperiod is not None:
            expect.equal(ctx.detect(stream).smallest, shape.predicted_quasiperiod, f'{stream} prediction')


@check('cross-theorems', 'CT-3', 'aperiodic streams with quasiperiod evidence are not Lyndon in either order')
def evidence_refutes_lyndon(ctx: HarnessContext, expect: Expect):
    # a^ω is covered by a but stays consistent
    for stream in aperiodic_streams():
        if ctx.detect(stream).verdict is not Verdict.EVIDENCE_QUASIPERIODIC:
            continue
        prefix = ctx.prefix(stream)
        for order in LetterOrder:
            expect.equal(lyndon.lyndon_status_text(prefix, order).outcome, LyndonOutcome.REFUTED,
                         f'{stream} under {order.symbol}')
    for order in LetterOrder:
        expect.that(lyndon.lyndon_status_text(ctx.prefix(A_OMEGA), order).is_consistent,
                    f'a^ω consistent under {order.symbol}')


@check('cross-theorems', 'CT-4', 'non-quasiperiodic Sturmian words are Lyndon under the matched order')
def decision_matches_lyndon(ctx: HarnessContext, expect: Expect):
    for stream in directive_streams():
        decision = sturmian.decide(stream.seq)
        status_ab = lyndon.lyndon_status_text(ctx.prefix(stream), LetterOrder.A_BEFORE_B)
        status_ba = lyndon.lyndon_status_text(ctx.prefix(stream), LetterOrder.B_BEFORE_A)
        consistent = {o for o, s in ((LetterOrder.A_BEFORE_B, status_ab), (LetterOrder.B_BEFORE_A, status_ba))
                      if s.is_consistent}
        expected = {decision.lyndon_order} if decision.lyndon_order else set()
        expect.equal(consistent, expected, f'{stream}')


class VerificationHarness:
    """Runs registered suites and collects their outcomes."""

    def __init__(self, seed: int = None, prefix_length: int = None, max_quasiperiod: int = None,
                 budget: int = None, cap: int = None):
        self.context = HarnessContext(seed=Config.VERIFY_SEED if seed is None else seed)
        if prefix_length:
            self.context.prefix_length = prefix_length
        if max_quasiperiod:
            self.context.max_quasiperiod = max_quasiperiod
        if budget:
            self.context.budget = budget
        if cap:
            self.context.cap = cap

    @staticmethod
    def suite_names() -> List[str]:
        return list(SUITES)

    def resolve(self, name: str) -> List[str]:
        if name == 'all':
            return self.suite_names()
        if name not in SUITES:
            raise UnknownSuite(name, self.suite_names())
        return [name]

    def run_check(self, item: Check) -> CheckResult:
        expect = Expect()
        try:
            item.func(self.context, expect)
            passed, details = expect.outcome()
        except QuasiwordsError as e:
            logger.error(f"Check {item.id} raised {type(e).__name__}: {e}", exc_info=True)
            passed, details = False, f'{type(e).__name__}: {e}'
        except Exception as e:
            logger.error(f"Check {item.id} crashed: {e}", exc_info=True)
            passed, details = False, f'{type(e).__name__}: {e}'
        if passed:
            logger.info(f"Check {item.id} passed: {details}")
        else:
            logger.warning(f"Check {item.id} failed: {details}")
        return CheckResult(item.id, item.description, passed, details)

    def run_suite(self, name: str, on_check: Callable[[CheckResult], None] = None) -> VerifyOutcome:
        outcome = VerifyOutcome(suite=name)
        logger.info(f"Running suite {name} with seed {self.context.seed}")
        for item in SUITES[name]:
            result = self.run_check(item)
            outcome.checks.append(result)
            if on_check:
                on_check(result)
        return outcome

    def run(self, name: str, on_check: Callable[[CheckResult], None] = None) -> List[VerifyOutcome]:
        return [self.run_suite(suite, on_check) for suite in self.resolve(name)]
