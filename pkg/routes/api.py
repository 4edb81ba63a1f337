"""JSON API over the analysis reports; bodies match the CLI's --json output."""

import logging

from flask import Blueprint, current_app, jsonify, request

from models.words import LetterOrder
from services.report_service import AnalysisService
from utils.errors import InputError, QuasiwordsError

logger = logging.getLogger(__name__)

bp = Blueprint('api', __name__, url_prefix='/api')


def _service() -> AnalysisService:
    return AnalysisService.from_config(current_app.config)


def _required(name: str) -> str:
    value = request.args.get(name, '').strip()
    if not value:
        raise InputError(f"Missing query parameter '{name}'")
    return value


def _order() -> LetterOrder:
    try:
        return LetterOrder.parse(request.args.get('order', 'ab'))
    except ValueError:
        raise InputError("Query parameter 'order' must be 'ab' or 'ba'")


@bp.errorhandler(QuasiwordsError)
def handle_library_error(e: QuasiwordsError):
    logger.info(f"API request rejected with {type(e).__name__}: {e}")
    return jsonify({'error': str(e), 'kind': type(e).__name__}), e.http_status


@bp.route('/word/<text>')
def word(text):
    return jsonify(_service().word_report(text, _order()))


@bp.route('/stream')
def stream():
    report = _service().stream_report(
        _required('spec'),
        prefix_length=request.args.get('prefix', type=int),
        max_quasiperiod=request.args.get('max_qp', type=int),
        order=_order(),
        budget=request.args.get('budget', type=int),
    )
    return jsonify(report)


@bp.route('/sturmian/decide')
def sturmian_decide():
    return jsonify(_service().decide_report(_required('directive')))


@bp.route('/sturmian/generate')
def sturmian_generate():
    report = _service().generate_report(
        _required('directive'),
        prefix_length=request.args.get('prefix', type=int),
        budget=request.args.get('budget', type=int),
    )
    return jsonify(report)


@bp.route('/morphism/classify')
def morphism_classify():
    return jsonify(_service().classify_report(_required('gens')))


@bp.route('/morphism/apply')
def morphism_apply():
    return jsonify(_service().apply_report(_required('gens'), request.args.get('word', '')))
