import pytest

from config import Config
from services import verify_service
from services.verify_service import Check, Expect, HarnessContext, VerificationHarness
from utils.errors import DirectiveViolation, UnknownSuite

EXPECTED_SUITES = [
    'core-words', 'quasiperiodicity', 'lyndon', 'relations', 'sturmian', 'classify',
    'paper-examples', 'cross-theorems',
]


def test_suite_names():
    assert VerificationHarness.suite_names() == EXPECTED_SUITES


def test_check_ids_are_unique():
    ids = [item.id for checks in verify_service.SUITES.values() for item in checks]
    assert len(ids) == len(set(ids))


def test_resolve():
    harness = VerificationHarness()
    assert harness.resolve('all') == EXPECTED_SUITES
    assert harness.resolve('lyndon') == ['lyndon']
    with pytest.raises(UnknownSuite):
        harness.resolve('everything')


def test_harness_defaults():
    harness = VerificationHarness()
    assert harness.context.seed == Config.VERIFY_SEED
    assert harness.context.prefix_length == Config.DEFAULT_PREFIX_LENGTH

    harness = VerificationHarness(seed=0, prefix_length=500, cap=10)
    assert harness.context.seed == 0
    assert harness.context.prefix_length == 500
    assert harness.context.cap == 10


def test_rng_is_seeded():
    ctx = HarnessContext(seed=3)
    assert ctx.rng().integers(0, 1000, size=5).tolist() == ctx.rng().integers(0, 1000, size=5).tolist()


def test_expect_collects_failures():
    expect = Expect()
    expect.that(True, 'fine')
    expect.equal(2, 3, 'sum')
    expect.raises(DirectiveViolation, int, '7', label='no error')
    passed, details = expect.outcome()
    assert not passed
    assert details.startswith('2 of 3 expectations failed')
    assert "sum: expected 3, got 2" in details
    assert 'nothing raised' in details


def test_expect_limits_reported_failures():
    expect = Expect()
    for i in range(8):
        expect.that(False, f'failure {i}')
    passed, details = expect.outcome()
    assert '(+3 more)' in details
    assert 'failure 5' not in details


def test_expect_passes():
    expect = Expect()
    expect.raises(ValueError, int, 'x', label='bad int')
    assert expect.outcome() == (True, '1 expectations held')


def test_crashing_check_is_recorded(monkeypatch):
    def crash(ctx, expect):
        raise KeyError('missing')

    monkeypatch.setattr(verify_service, 'SUITES', {
        'demo': [Check('D-1', 'crashes', crash), Check('D-2', 'runs anyway', lambda ctx, e: e.that(True, 'ok'))],
    })
    seen = []
    outcome = VerificationHarness().run_suite('demo', on_check=seen.append)
    assert [result.id for result in seen] == ['D-1', 'D-2']
    assert outcome.failed_count == 1
    assert outcome.passed_count == 1
    assert 'KeyError' in outcome.checks[0].details
    assert outcome.to_dict()['failed'] == 1


ALL_CHECKS = [item for checks in verify_service.SUITES.values() for item in checks]


@pytest.mark.parametrize('item', ALL_CHECKS, ids=lambda item: item.id)
def test_check_passes(item):
    result = VerificationHarness().run_check(item)
    assert result.passed, result.details


def test_aperiodic_fixtures_exclude_constant_words():
    assert verify_service.A_OMEGA not in verify_service.aperiodic_streams()
