import pytest
from click.testing import CliRunner

from app import create_app
from config import Config
from models.streams import Directive
from services.report_service import AnalysisService
from services.stream_specs import parse_directive, parse_generator_word


class TestConfig(Config):
    TESTING = True


@pytest.fixture
def app():
    return create_app(TestConfig)


@pytest.fixture
def client(app):
    return app.test_client()


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def service():
    return AnalysisService()


@pytest.fixture
def gw():
    return parse_generator_word


@pytest.fixture
def la_rb_stream():
    """(La Rb)^ω(a), non-quasiperiodic, Lyndon under a<b."""
    return Directive(parse_directive('per=[(1,0)(1,1)]'))


@pytest.fixture
def lb_ra_stream():
    """(Lb Ra)^ω(a), non-quasiperiodic, Lyndon under b<a."""
    return Directive(parse_directive('pre=[(0,0)(1,0)]per=[(1,1)(1,0)]'))
