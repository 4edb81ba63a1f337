import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from models.morphism import BinaryMorphism
from models.streams import Fibonacci, FixedPoint, MorphicImage, Periodic, ThueMorse
from models.words import FiniteWord, Letter
from services import core_words
from services.stream_specs import parse_stream_spec
from utils.errors import EmptyPattern, InputError, InvalidCharacter, NotProlongable

binary_words = st.text(alphabet='ab', max_size=30)
patterns = st.text(alphabet='ab', min_size=1, max_size=5)


def test_parse_word():
    assert core_words.parse_word('aba') == FiniteWord('aba')
    assert core_words.parse_word('').is_empty


def test_parse_word_reports_first_bad_position():
    with pytest.raises(InvalidCharacter) as excinfo:
        core_words.parse_word('abxc')
    assert excinfo.value.position == 2
    assert excinfo.value.exit_code == 2


def test_invalid_character_is_a_value_error():
    with pytest.raises(ValueError):
        FiniteWord('abc')


def test_count_letter():
    assert core_words.count_letter('aba', 'a') == 2
    assert core_words.count_letter('aba', Letter.B) == 1
    assert core_words.count_letter('', 'a') == 0


@pytest.mark.parametrize('pattern, text, expected', [
    ('aba', 'ababa', [0, 2]),
    ('a', 'aaa', [0, 1, 2]),
    ('ab', 'ba', []),
    ('abab', 'ab', []),
])
def test_occurrences(pattern, text, expected):
    assert core_words.occurrences(pattern, text) == expected


def test_occurrences_rejects_empty_pattern():
    with pytest.raises(EmptyPattern):
        core_words.occurrences('', 'ab')


@given(pattern=patterns, text=binary_words)
def test_occurrences_match_quadratic_scan(pattern, text):
    assert core_words.occurrences(pattern, text) == core_words.occurrences_naive(pattern, text)


def test_failure_function():
    assert core_words.failure_function('abaab') == [0, 0, 1, 1, 2]
    assert core_words.failure_function('') == []


def test_proper_borders():
    borders = [b.letters for b in core_words.proper_borders('abaababaabaababaaba')]
    assert {'aba', 'abaaba', 'abaababaaba'} <= set(borders)
    assert [b.letters for b in core_words.proper_borders('aaa')] == ['a', 'aa']
    assert core_words.proper_borders('ab') == []
    assert core_words.proper_borders('') == []


@given(text=binary_words)
def test_borders_are_prefixes_and_suffixes(text):
    for border in core_words.proper_borders(text):
        assert 0 < len(border) < len(text)
        assert text.startswith(border.letters)
        assert text.endswith(border.letters)


def test_z_array():
    z = core_words.z_array('aabaa')
    assert isinstance(z, np.ndarray)
    assert z.tolist() == [5, 1, 0, 2, 1]
    assert core_words.z_array('').tolist() == []


def test_letter_array():
    assert core_words.letter_array('abba').tolist() == [1, 0, 0, 1]


@pytest.mark.parametrize('text, expected', [
    ('abaababa', True),
    ('ababaaa', False),
    ('aabb', False),
    ('', True),
    ('b', True),
])
def test_is_balanced(text, expected):
    assert core_words.is_balanced(text) is expected


def test_thue_morse_prefix():
    assert core_words.stream_prefix(ThueMorse(), 8).letters == 'abbabaab'


def test_fibonacci_prefix():
    assert core_words.stream_prefix(Fibonacci(), 8).letters == 'abaababa'


def test_periodic_prefix():
    stream = Periodic(FiniteWord('ab'), FiniteWord('a'))
    assert core_words.stream_prefix_text(stream, 5) == 'abaaa'
    assert core_words.stream_prefix_text(stream, 1) == 'a'


def test_fixed_point_with_seed_b():
    stream = FixedPoint(BinaryMorphism.from_images('ab', 'ba'), Letter.B)
    assert core_words.stream_prefix_text(stream, 8) == 'baababba'


def test_fixed_point_must_be_prolongable():
    stream = FixedPoint(BinaryMorphism.from_images('ba', 'a'))
    with pytest.raises(NotProlongable):
        core_words.stream_prefix_text(stream, 4)


def test_morphic_image_prefix():
    stream = MorphicImage(BinaryMorphism.from_images('a', 'ab'), Fibonacci())
    assert core_words.stream_prefix_text(stream, 6) == 'aabaaa'


def test_prefix_length_must_be_positive():
    with pytest.raises(InputError):
        core_words.stream_prefix_text(Fibonacci(), 0)


@pytest.mark.parametrize('spec', [
    'fibonacci',
    'thue-morse',
    'periodic:ab,aaab',
    'directive:per=[(2,1)(1,0)]',
    'image:La,Rb@directive:per=[(1,0)(1,1)]',
])
def test_prefixes_are_monotone(spec):
    stream = parse_stream_spec(spec)
    longest = core_words.stream_prefix_text(stream, 200)
    for n in (1, 7, 64, 199):
        assert core_words.stream_prefix_text(stream, n) == longest[:n]
