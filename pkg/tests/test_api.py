import json

import pytest

from cli_commands import cli
from services.report_service import validate_report


def test_word_endpoint(client):
    response = client.get('/api/word/abaababaabaababaaba')
    assert response.status_code == 200
    report = response.get_json()
    validate_report(report)
    assert report['results']['quasiperiods'] == ['aba', 'abaaba', 'abaababaaba']


def test_word_endpoint_order(client):
    report = client.get('/api/word/ba?order=ba').get_json()
    assert report['inputs']['order'] == 'ba'
    assert report['results']['lyndon_in_order'] is True


def test_invalid_word(client):
    response = client.get('/api/word/abc')
    assert response.status_code == 400
    assert response.get_json()['kind'] == 'InvalidCharacter'


def test_invalid_order(client):
    response = client.get('/api/word/ab?order=xy')
    assert response.status_code == 400
    assert response.get_json()['kind'] == 'InputError'


def test_stream_endpoint(client):
    response = client.get('/api/stream', query_string={'spec': 'fibonacci', 'prefix': 200, 'max_qp': 12})
    assert response.status_code == 200
    report = response.get_json()
    validate_report(report)
    assert report['results']['quasiperiod_report']['smallest'] == 'aba'


def test_stream_endpoint_needs_spec(client):
    response = client.get('/api/stream')
    assert response.status_code == 400
    assert 'spec' in response.get_json()['error']


def test_sturmian_decide_endpoint(client):
    response = client.get('/api/sturmian/decide', query_string={'directive': 'per=[(1,0)(1,0)]'})
    assert response.status_code == 200
    assert response.get_json()['results']['decision']['verdict'] == 'EXACT_QUASIPERIODIC'


def test_sturmian_generate_endpoint(client):
    response = client.get('/api/sturmian/generate', query_string={'directive': 'per=[(1,0)(1,1)]', 'prefix': 6})
    assert response.status_code == 200
    assert response.get_json()['results']['prefix'] == 'aabaab'


def test_generation_budget_is_unprocessable(client):
    response = client.get('/api/sturmian/generate',
                          query_string={'directive': 'per=[(1,0)(1,0)]', 'prefix': 100, 'budget': 1})
    assert response.status_code == 422
    assert response.get_json()['kind'] == 'GenerationStalled'


def test_morphism_endpoints(client):
    classified = client.get('/api/morphism/classify', query_string={'gens': 'La Ra'}).get_json()
    assert classified['results']['classification'] == 'WEAKLY_QUASIPERIODIC'
    assert classified['results']['on_sturmian'] == 'STRONGLY_ON_STURMIAN'

    applied = client.get('/api/morphism/apply', query_string={'gens': 'La Lb', 'word': 'ab'}).get_json()
    assert applied['results']['image'] == 'abaab'


@pytest.mark.parametrize('path, query, args', [
    ('/api/word/aabab', {}, ['word', 'analyze', 'aabab']),
    ('/api/morphism/classify', {'gens': 'Ra La Rb'}, ['morphism', 'classify', 'Ra La Rb']),
    ('/api/stream', {'spec': 'image:Rb@fibonacci', 'prefix': 400, 'max_qp': 30},
     ['stream', 'analyze', 'image:Rb@fibonacci', '--prefix', '400', '--max-qp', '30']),
])
def test_api_matches_cli_json(client, runner, path, query, args):
    api_report = client.get(path, query_string=query).get_json()
    result = runner.invoke(cli, args + ['--json'])
    assert result.exit_code == 0
    assert json.loads(result.output) == api_report
