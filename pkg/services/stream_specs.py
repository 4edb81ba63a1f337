"""Text forms of generator words, directive sequences and stream specs.

    periodic:<head>,<cycle>
    fixedpoint:a=<word>,b=<word>[,seed=<letter>]
    directive:pre=[(d,c)(d,c);...]per=[(d,c)(d,c);...]
    image:<generators>@<stream>        image:a=<word>,b=<word>@<stream>
    thue-morse
    fibonacci
"""

import re

from models.directive import Block, DirectiveSequence
from models.morphism import BinaryMorphism, Generator, GeneratorWord
from models.streams import (
    Directive, Fibonacci, FixedPoint, MorphicImage, Periodic, ThueMorse, WordStream,
)
from models.words import FiniteWord, Letter
from services.morphisms import morphism_of
from utils.errors import (
    DirectiveSyntaxError, GeneratorParseError, QuasiwordsError, StreamSpecError,
)

_TOKEN_SPLIT = re.compile(r'[\s,]+')
_GENERATOR_RUN = re.compile(r'(?:E|[LR][AB])+', re.IGNORECASE)
_GENERATOR = re.compile(r'E|[LR][AB]', re.IGNORECASE)
_IDENTITY_TOKENS = {'id', 'identity'}

_DIRECTIVE = re.compile(
    r'\s*(?:pre\s*=\s*\[(?P<pre>[^\]]*)\])?\s*;?\s*per\s*=\s*\[(?P<per>[^\]]*)\]\s*', re.IGNORECASE,
)
_BLOCK = re.compile(r'\(\s*(\d+)\s*,\s*(\d+)\s*\)')
_SEPARATORS = re.compile(r'[\s;,]*')


def parse_generator_word(text: str) -> GeneratorWord:
    """Whitespace- or comma-separated generator names, case-insensitive."""
    gens = []
    for token in _TOKEN_SPLIT.split(text.strip()):
        if not token or token.lower() in _IDENTITY_TOKENS:
            continue
        if not _GENERATOR_RUN.fullmatch(token):
            raise GeneratorParseError(token)
        for name in _GENERATOR.findall(token):
            gens.append(Generator(name[0].upper() + name[1:].lower()))
    return GeneratorWord(tuple(gens))


def format_generator_word(gw: GeneratorWord) -> str:
    return str(gw)


def _parse_blocks(text: str, body: str, label: str):
    if not _SEPARATORS.fullmatch(_BLOCK.sub('', body)):
        raise DirectiveSyntaxError(text, f'unexpected characters in {label}=[...]')
    blocks = []
    for d, c in _BLOCK.findall(body):
        try:
            blocks.append(Block(int(d), int(c)))
        except QuasiwordsError as e:
            raise DirectiveSyntaxError(text, str(e))
    if len(blocks) % 2:
        raise DirectiveSyntaxError(text, f'{label}=[...] must list whole pairs (a-block then b-block)')
    return tuple((blocks[i], blocks[i + 1]) for i in range(0, len(blocks), 2))


def parse_directive(text: str) -> DirectiveSequence:
    match = _DIRECTIVE.fullmatch(text)
    if not match:
        raise DirectiveSyntaxError(text, 'expected pre=[...]per=[...]')
    preperiod = _parse_blocks(text, match.group('pre') or '', 'pre')
    period = _parse_blocks(text, match.group('per'), 'per')
    if not period:
        raise DirectiveSyntaxError(text, 'per=[...] must contain at least one pair')
    return DirectiveSequence(preperiod, period)


def format_directive(seq: DirectiveSequence) -> str:
    def pairs(items):
        return ';'.join(f'{a}{b}' for a, b in items)
    return f'pre=[{pairs(seq.preperiod)}]per=[{pairs(seq.period)}]'


def _parse_images(text: str, body: str) -> dict:
    images = {}
    for part in body.split(','):
        key, sep, value = part.partition('=')
        if not sep:
            raise StreamSpecError(text, f'expected key=value, got {part!r}')
        images[key.strip().lower()] = value.strip()
    return images


def _parse_morphism(text: str, body: str) -> BinaryMorphism:
    images = _parse_images(text, body)
    if set(images) != {'a', 'b'}:
        raise StreamSpecError(text, 'a morphism needs exactly the keys a= and b=')
    return BinaryMorphism(FiniteWord(images['a']), FiniteWord(images['b']))


def parse_stream_spec(text: str) -> WordStream:
    spec = text.strip()
    kind, _, body = spec.partition(':')
    kind = kind.lower()
    try:
        if kind == 'thue-morse' and not body:
            return ThueMorse()
        if kind == 'fibonacci' and not body:
            return Fibonacci()
        if kind == 'periodic':
            head, sep, cycle = body.partition(',')
            if not sep:
                raise StreamSpecError(text, 'expected periodic:<head>,<cycle>')
            return Periodic(FiniteWord(head.strip()), FiniteWord(cycle.strip()))
        if kind == 'fixedpoint':
            images = _parse_images(text, body)
            seed = images.pop('seed', 'a')
            if set(images) != {'a', 'b'}:
                raise StreamSpecError(text, 'expected fixedpoint:a=<word>,b=<word>[,seed=<letter>]')
            morphism = BinaryMorphism(FiniteWord(images['a']), FiniteWord(images['b']))
            return FixedPoint(morphism, Letter(seed))
        if kind == 'directive':
            return Directive(parse_directive(body))
        if kind == 'image':
            head, sep, inner = body.partition('@')
            if not sep:
                raise StreamSpecError(text, 'expected image:<morphism>@<stream>')
            inner_stream = parse_stream_spec(inner)
            if '=' in head:
                return MorphicImage(_parse_morphism(text, head), inner_stream)
            gens = parse_generator_word(head)
            return MorphicImage(morphism_of(gens), inner_stream, gens)
    except StreamSpecError:
        raise
    except QuasiwordsError as e:
        raise StreamSpecError(text, str(e))
    except ValueError as e:
        raise StreamSpecError(text, str(e))

    raise StreamSpecError(text, 'unknown stream kind')


def format_stream_spec(s: WordStream) -> str:
    """Canonical text; parse_stream_spec(format_stream_spec(s)) == s."""
    if isinstance(s, ThueMorse):
        return 'thue-morse'
    if isinstance(s, Fibonacci):
        return 'fibonacci'
    if isinstance(s, Periodic):
        return f'periodic:{s.head},{s.cycle}'
    if isinstance(s, FixedPoint):
        text = f'fixedpoint:a={s.morphism.image_a},b={s.morphism.image_b}'
        return text if Letter(s.seed) is Letter.A else f'{text},seed={Letter(s.seed).value}'
    if isinstance(s, Directive):
        return f'directive:{format_directive(s.seq)}'
    if isinstance(s, MorphicImage):
        inner = format_stream_spec(s.inner)
        if s.generators is not None:
            return f'image:{",".join(g.value for g in s.generators) or "Id"}@{inner}'
        return f'image:a={s.morphism.image_a},b={s.morphism.image_b}@{inner}'
    raise StreamSpecError(repr(s), 'unsupported stream spec')
