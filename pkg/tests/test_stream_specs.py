import pytest

from models.directive import Block
from models.morphism import BinaryMorphism, Generator, GeneratorWord
from models.streams import Directive, Fibonacci, FixedPoint, MorphicImage, Periodic, ThueMorse
from models.words import FiniteWord, Letter
from services import stream_specs
from utils.errors import DirectiveSyntaxError, GeneratorParseError, StreamSpecError


@pytest.mark.parametrize('text, expected', [
    ('La Rb', (Generator.LA, Generator.RB)),
    ('la,rb', (Generator.LA, Generator.RB)),
    ('LaRbE', (Generator.LA, Generator.RB, Generator.E)),
    ('Id', ()),
    ('', ()),
])
def test_parse_generator_word(text, expected):
    assert stream_specs.parse_generator_word(text).gens == expected


@pytest.mark.parametrize('text', ['Xy', 'La Q', 'Lc'])
def test_parse_generator_word_rejects_unknown_tokens(text):
    with pytest.raises(GeneratorParseError):
        stream_specs.parse_generator_word(text)


def test_format_generator_word():
    assert stream_specs.format_generator_word(GeneratorWord((Generator.RA, Generator.E))) == 'Ra E'
    assert stream_specs.format_generator_word(GeneratorWord()) == 'Id'


def test_parse_directive():
    seq = stream_specs.parse_directive('pre=[(0,0)(1,0)]per=[(1,1)(1,0)]')
    assert seq.preperiod == ((Block(0, 0), Block(1, 0)),)
    assert seq.period == ((Block(1, 1), Block(1, 0)),)


def test_parse_directive_without_preperiod():
    seq = stream_specs.parse_directive('per=[(1,0)(1,1); (2,0)(1,1)]')
    assert seq.preperiod == ()
    assert len(seq.period) == 2


@pytest.mark.parametrize('text', [
    'per=[(1,0)]',
    'pre=[(1,0)(1,0)]per=[]',
    'per=[(1,2)(1,0)]',
    'per=[(1,0)(1,0)x]',
    'period=[(1,0)(1,0)]',
])
def test_parse_directive_errors(text):
    with pytest.raises(DirectiveSyntaxError):
        stream_specs.parse_directive(text)


@pytest.mark.parametrize('text', [
    'pre=[(0,0)(1,0)]per=[(1,1)(1,0)]',
    'pre=[]per=[(1,0)(1,1);(2,1)(1,0)]',
])
def test_format_directive(text):
    assert stream_specs.format_directive(stream_specs.parse_directive(text)) == text


@pytest.mark.parametrize('text, expected', [
    ('thue-morse', ThueMorse()),
    ('fibonacci', Fibonacci()),
    ('periodic:ab,a', Periodic(FiniteWord('ab'), FiniteWord('a'))),
    ('periodic:,ba', Periodic(FiniteWord(''), FiniteWord('ba'))),
    ('fixedpoint:a=ab,b=ba,seed=b', FixedPoint(BinaryMorphism.from_images('ab', 'ba'), Letter.B)),
    ('image:a=aa,b=ab@fibonacci', MorphicImage(BinaryMorphism.from_images('aa', 'ab'), Fibonacci())),
])
def test_parse_stream_spec(text, expected):
    assert stream_specs.parse_stream_spec(text) == expected


def test_parse_nested_stream_spec():
    stream = stream_specs.parse_stream_spec('image:La,Rb@directive:per=[(1,0)(1,1)]')
    assert isinstance(stream, MorphicImage)
    assert stream.generators == GeneratorWord((Generator.LA, Generator.RB))
    assert stream.morphism == BinaryMorphism.from_images('aab', 'ab')
    assert isinstance(stream.inner, Directive)


@pytest.mark.parametrize('text', [
    'periodic:ab',
    'periodic:ab,',
    'periodic:ac,a',
    'foo',
    'fibonacci:x',
    'fixedpoint:a=ab',
    'image:La@',
    'image:Xy@fibonacci',
    'directive:per=[(1,0)]',
])
def test_parse_stream_spec_errors(text):
    with pytest.raises(StreamSpecError):
        stream_specs.parse_stream_spec(text)


@pytest.mark.parametrize('text', [
    'thue-morse',
    'fibonacci',
    'periodic:ab,a',
    'fixedpoint:a=ab,b=ba,seed=b',
    'fixedpoint:a=ab,b=a',
    'directive:pre=[(0,0)(1,0)]per=[(1,1)(1,0)]',
    'image:La,Rb@fibonacci',
    'image:a=aa,b=ab@periodic:,ab',
])
def test_format_stream_spec(text):
    stream = stream_specs.parse_stream_spec(text)
    assert stream_specs.format_stream_spec(stream) == text
    assert stream_specs.parse_stream_spec(stream_specs.format_stream_spec(stream)) == stream
