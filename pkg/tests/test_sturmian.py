import pytest

from models.directive import Block, DirectiveSequence
from models.morphism import Generator
from models.reports import Verdict
from models.words import LetterOrder
from services import sturmian
from services.core_words import is_balanced
from services.quasiperiodicity import detect_quasiperiods_text
from services.stream_specs import parse_directive
from utils.errors import DirectiveViolation, GenerationStalled, InputError, TooFewBs

FIBONACCI_DIRECTIVE = 'per=[(1,0)(1,0)]'
LA_RB = 'per=[(1,0)(1,1)]'
LB_RA = 'pre=[(0,0)(1,0)]per=[(1,1)(1,0)]'


def test_block_bounds():
    with pytest.raises(InputError):
        Block(1, 2)
    with pytest.raises(InputError):
        Block(0, -1)


@pytest.mark.parametrize('text, block_index', [
    ('per=[(1,0)(0,0)]', 2),
    ('per=[(1,1)(1,1)]', 2),
    ('per=[(1,1)(2,1)]', 3),
])
def test_validate_directive_reports_first_violation(text, block_index):
    violation = sturmian.validate_directive(parse_directive(text))
    assert violation.block_index == block_index


@pytest.mark.parametrize('text', [FIBONACCI_DIRECTIVE, LA_RB, LB_RA, 'per=[(2,1)(1,0)]'])
def test_valid_directives(text):
    assert sturmian.validate_directive(parse_directive(text)) is None


def test_invalid_directive_cannot_generate():
    with pytest.raises(DirectiveViolation):
        sturmian.sturmian_prefix_text(parse_directive('per=[(1,0)(0,0)]'), 10)


def test_block_generators():
    assert sturmian.block_generators(Block(3, 1), odd=True) == [Generator.LA, Generator.LA, Generator.RA]
    assert sturmian.block_generators(Block(2, 2), odd=False) == [Generator.RB, Generator.RB]
    assert sturmian.block_generators(Block(0, 0), odd=True) == []


def test_directive_to_generators():
    gens = sturmian.directive_to_generators(parse_directive(LB_RA), 3)
    assert str(gens) == 'Lb Ra Lb Ra Lb'
    with pytest.raises(InputError):
        sturmian.directive_to_generators(parse_directive(LB_RA), 0)


@pytest.mark.parametrize('text, prefix', [
    (FIBONACCI_DIRECTIVE, 'abaababa'),
    (LA_RB, 'aabaab'),
    (LB_RA, 'bbabba'),
])
def test_sturmian_prefix(text, prefix):
    assert sturmian.sturmian_prefix_text(parse_directive(text), len(prefix)) == prefix


def test_generation_trace():
    assert sturmian.generation_trace(parse_directive(LB_RA), 3) == [1, 4]


def test_generation_stalls_within_a_tiny_budget():
    with pytest.raises(GenerationStalled) as excinfo:
        sturmian.sturmian_prefix_text(parse_directive(FIBONACCI_DIRECTIVE), 100, budget=1)
    assert excinfo.value.wanted == 100
    assert excinfo.value.exit_code == 3


@pytest.mark.parametrize('text', [FIBONACCI_DIRECTIVE, LA_RB, LB_RA, 'per=[(2,1)(1,0)]'])
def test_generated_prefixes_are_balanced(text):
    assert is_balanced(sturmian.sturmian_prefix_text(parse_directive(text), 500))


def test_is_standard():
    assert sturmian.is_standard(parse_directive(FIBONACCI_DIRECTIVE))
    assert not sturmian.is_standard(parse_directive(LA_RB))


@pytest.mark.parametrize('text, verdict, order', [
    (FIBONACCI_DIRECTIVE, Verdict.EXACT_QUASIPERIODIC, None),
    ('per=[(2,1)(1,0)]', Verdict.EXACT_QUASIPERIODIC, None),
    (LA_RB, Verdict.EXACT_NON_QUASIPERIODIC, LetterOrder.A_BEFORE_B),
    (LB_RA, Verdict.EXACT_NON_QUASIPERIODIC, LetterOrder.B_BEFORE_A),
])
def test_decide(text, verdict, order):
    decision = sturmian.decide(parse_directive(text))
    assert decision.verdict is verdict
    assert decision.lyndon_order is order
    assert decision.verdict.is_exact


@pytest.mark.parametrize('text', [FIBONACCI_DIRECTIVE, LA_RB, LB_RA, 'per=[(2,1)(1,0)]'])
def test_decision_agrees_with_prefix_evidence(text):
    seq = parse_directive(text)
    report = detect_quasiperiods_text(sturmian.sturmian_prefix_text(seq, 2000), 20)
    expected = report.verdict is Verdict.EVIDENCE_QUASIPERIODIC
    assert (sturmian.decide(seq).verdict is Verdict.EXACT_QUASIPERIODIC) == expected


def test_decide_rejects_invalid_directive():
    with pytest.raises(DirectiveViolation):
        sturmian.decide(DirectiveSequence.from_pairs([], [((1, 1), (1, 1))]))


@pytest.mark.parametrize('prefix, conforms, i, n, predicted', [
    ('abaab', True, 1, 2, 'abaa'),
    ('abaababaab', True, 1, 1, 'aba'),
    ('babab', True, 0, 1, None),
    ('aaabab', False, 3, 1, None),
])
def test_check_shape(prefix, conforms, i, n, predicted):
    report = sturmian.check_shape(prefix)
    assert (report.conforms, report.i, report.n) == (conforms, i, n)
    assert report.to_dict()['predicted_quasiperiod'] == predicted


def test_check_shape_needs_two_bs():
    with pytest.raises(TooFewBs):
        sturmian.check_shape('aaba')
