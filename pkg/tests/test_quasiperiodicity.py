import pytest
from hypothesis import given
from hypothesis import strategies as st

from models.reports import Verdict
from services import quasiperiodicity
from services.core_words import stream_prefix_text
from services.stream_specs import parse_stream_spec
from utils.errors import EmptyInput, InputError

GOLDEN = 'abaababaabaababaaba'

nonempty_words = st.text(alphabet='ab', min_size=1, max_size=16)


def detect(spec, n=2000, max_length=100):
    return quasiperiodicity.detect_quasiperiods_stream(parse_stream_spec(spec), n, max_length)


def test_golden_word_quasiperiods():
    found = [q.letters for q in quasiperiodicity.quasiperiods(GOLDEN)]
    assert found == ['aba', 'abaaba', 'abaababaaba']
    assert quasiperiodicity.smallest_quasiperiod(GOLDEN).letters == 'aba'
    assert not quasiperiodicity.is_superprimitive(GOLDEN)
    assert quasiperiodicity.is_superprimitive('aba')


def test_covers():
    assert quasiperiodicity.covers('aba', GOLDEN)
    assert quasiperiodicity.covers('aba', 'ababa')
    assert not quasiperiodicity.covers('ab', 'aba')
    assert quasiperiodicity.covers('aba', 'aba')


def test_covers_rejects_empty_input():
    with pytest.raises(EmptyInput):
        quasiperiodicity.covers('a', '')
    with pytest.raises(EmptyInput):
        quasiperiodicity.covered_prefix_length('', 'ab')


@pytest.mark.parametrize('u, w, expected', [
    ('aba', 'abaababa', 8),
    ('aba', 'abba', 0),
    ('a', 'aab', 2),
    ('ab', 'abab', 4),
])
def test_covered_prefix_length(u, w, expected):
    assert quasiperiodicity.covered_prefix_length(u, w) == expected


def test_evidence_chain():
    assert quasiperiodicity.evidence_chain('aba', 'abaababa') == [0, 3, 5]
    assert quasiperiodicity.evidence_chain('aba', 'bab') == []


def test_smallest_quasiperiod():
    assert quasiperiodicity.smallest_quasiperiod('ababa').letters == 'aba'
    assert quasiperiodicity.smallest_quasiperiod('aa').letters == 'a'
    assert quasiperiodicity.smallest_quasiperiod('baa') is None


@given(text=nonempty_words)
def test_border_filter_matches_positional_definition(text):
    assert quasiperiodicity.quasiperiods(text) == quasiperiodicity.naive_quasiperiods(text)


@given(text=nonempty_words)
def test_only_the_smallest_quasiperiod_is_superprimitive(text):
    found = quasiperiodicity.quasiperiods(text)
    superprimitive = [q for q in found if quasiperiodicity.is_superprimitive(q)]
    assert superprimitive == found[:1]


def test_fibonacci_evidence():
    report = detect('fibonacci', 200, 12)
    assert report.verdict is Verdict.EVIDENCE_QUASIPERIODIC
    assert report.smallest.letters == 'aba'
    assert report.prefix_length_analyzed == 200
    assert report.candidates_bound == 12


@pytest.mark.parametrize('spec', ['periodic:ab,a', 'periodic:b,a', 'periodic:abab,aaab'])
def test_no_evidence_on_non_quasiperiodic_words(spec):
    report = detect(spec, 200, 12)
    assert report.verdict is Verdict.NO_QUASIPERIOD_DETECTED
    assert report.found == ()
    assert report.smallest is None


def test_thue_morse_has_no_evidence():
    assert detect('thue-morse', 1024, 64).verdict is Verdict.NO_QUASIPERIOD_DETECTED


@pytest.mark.parametrize('n', [1, 2, 3])
def test_counted_quasiperiods(n):
    report = detect(f'periodic:{"ab" * n}a,ab')
    assert len(report.found) == n


@pytest.mark.parametrize('spec, smallest', [
    ('image:La@fibonacci', 'aaba'),
    ('image:Rb@fibonacci', 'abbab'),
    ('image:La@periodic:abab,aaab', 'aabaa'),
    ('image:La,Lb@thue-morse', 'aba'),
    ('image:Ra@periodic:aba,b', 'aba'),
    ('image:Ra@periodic:a,b', 'ab'),
])
def test_smallest_evidence_of_images(spec, smallest):
    assert detect(spec).smallest.letters == smallest


def test_evidence_needs_a_short_enough_bound():
    with pytest.raises(InputError):
        detect('fibonacci', 100, 100)
    with pytest.raises(InputError):
        quasiperiodicity.detect_quasiperiods_text('abab', 0)


def test_explicit_zero_lengths_are_rejected():
    with pytest.raises(InputError):
        detect('fibonacci', 0, 10)
    with pytest.raises(InputError):
        detect('fibonacci', 200, 0)


def test_evidence_covers_all_but_the_tail():
    report = detect('fibonacci', 500, 20)
    for item in report.found:
        assert item.covered_length >= 500 - len(item.quasiperiod)


@pytest.mark.parametrize('text, expected', [
    ('abbabaab', True),
    ('aaa', False),
    ('ababa', False),
    ('aabb', True),
    ('', True),
])
def test_is_overlap_free(text, expected):
    assert quasiperiodicity.is_overlap_free(text) is expected


def test_thue_morse_prefix_is_overlap_free():
    assert quasiperiodicity.is_overlap_free(stream_prefix_text(parse_stream_spec('thue-morse'), 512))


def test_quasiperiodic_prefix_is_not_overlap_free():
    assert not quasiperiodicity.is_overlap_free(stream_prefix_text(parse_stream_spec('fibonacci'), 100))
