import json
import logging
from functools import lru_cache
from typing import Optional

import jsonschema

from config import Config
from models.reports import Verdict
from models.streams import Directive
from models.words import FiniteWord, LetterOrder
from services import classify as classify_service
from services import lyndon, morphisms, quasiperiodicity, sturmian
from services.core_words import count_letter, is_balanced, stream_prefix_text
from services.stream_specs import (
    format_directive, format_generator_word, format_stream_spec, parse_directive,
    parse_generator_word, parse_stream_spec,
)
from utils.errors import TooFewBs

logger = logging.getLogger(__name__)

PREFIX_SAMPLE_LENGTH = 64


def envelope(kind: str, inputs: dict, results: dict, provenance: dict) -> dict:
    return {
        'schema_version': Config.REPORT_SCHEMA_VERSION,
        'kind': kind,
        'inputs': inputs,
        'results': results,
        'provenance': provenance,
    }


def render_json(report: dict, indent: int = None) -> str:
    return json.dumps(report, indent=indent or Config.JSON_INDENT, sort_keys=True, ensure_ascii=False)


@lru_cache(maxsize=1)
def report_schema() -> dict:
    with open(Config.REPORT_SCHEMA_PATH, encoding='utf-8') as f:
        return json.load(f)


def validate_report(report: dict):
    """Raise jsonschema.ValidationError unless the report matches the published schema."""
    jsonschema.validate(instance=report, schema=report_schema())


def _shape_or_none(text: str) -> Optional[dict]:
    try:
        return sturmian.check_shape(text).to_dict()
    except TooFewBs:
        return None


class AnalysisService:
    """Builds the JSON-ready reports shared by the CLI and the API."""

    def __init__(self, prefix_length: int = None, max_quasiperiod: int = None,
                 pair_budget: int = None, closure_cap: int = None):
        self.prefix_length = Config.DEFAULT_PREFIX_LENGTH if prefix_length is None else prefix_length
        self.max_quasiperiod = Config.DEFAULT_MAX_QUASIPERIOD if max_quasiperiod is None else max_quasiperiod
        self.pair_budget = Config.DIRECTIVE_PAIR_BUDGET if pair_budget is None else pair_budget
        self.closure_cap = Config.CLOSURE_CAP if closure_cap is None else closure_cap

    @classmethod
    def from_config(cls, config) -> 'AnalysisService':
        return cls(
            prefix_length=config['DEFAULT_PREFIX_LENGTH'],
            max_quasiperiod=config['DEFAULT_MAX_QUASIPERIOD'],
            pair_budget=config['DIRECTIVE_PAIR_BUDGET'],
            closure_cap=config['CLOSURE_CAP'],
        )

    def word_report(self, text: str, order: LetterOrder = LetterOrder.A_BEFORE_B) -> dict:
        word = FiniteWord(text)
        found = quasiperiodicity.quasiperiods(word)
        lyndon_flags = {o.value: lyndon.is_lyndon(word, o) for o in LetterOrder}
        results = {
            'length': len(word),
            'count_a': count_letter(word, 'a'),
            'count_b': count_letter(word, 'b'),
            'quasiperiods': [q.letters for q in found],
            'smallest_quasiperiod': found[0].letters if found else None,
            'superprimitive': not found,
            'balanced': is_balanced(word),
            'unbordered': lyndon.is_unbordered(word),
            'lyndon': lyndon_flags,
            'lyndon_in_order': lyndon_flags[order.value],
            'overlap_free': quasiperiodicity.is_overlap_free(word),
            'shape': _shape_or_none(word.letters),
        }
        return envelope(
            'word-analysis',
            {'word': word.letters, 'order': order.value},
            results,
            {'quasiperiods': 'EXACT', 'lyndon': 'EXACT'},
        )

    def stream_report(self, spec_text: str, prefix_length: int = None, max_quasiperiod: int = None,
                      order: LetterOrder = LetterOrder.A_BEFORE_B, budget: int = None) -> dict:
        stream = parse_stream_spec(spec_text)
        n = self.prefix_length if prefix_length is None else prefix_length
        max_length = self.max_quasiperiod if max_quasiperiod is None else max_quasiperiod
        budget = self.pair_budget if budget is None else budget

        logger.info(f"Analyzing {format_stream_spec(stream)} on {n} letters")
        prefix = stream_prefix_text(stream, n, budget)
        report = quasiperiodicity.detect_quasiperiods_text(prefix, max_length)
        statuses = {o.value: lyndon.lyndon_status_text(prefix, o).to_dict() for o in LetterOrder}

        exact = None
        if isinstance(stream, Directive):
            exact = sturmian.decide(stream.seq)

        results = {
            'prefix_sample': prefix[:PREFIX_SAMPLE_LENGTH],
            'quasiperiod_report': report.to_dict(),
            'lyndon': statuses,
            'lyndon_in_order': statuses[order.value],
            'overlap_free': quasiperiodicity.is_overlap_free(prefix),
            'balanced': is_balanced(prefix),
            'shape': _shape_or_none(prefix),
            'exact_decision': exact.to_dict() if exact else None,
        }
        return envelope(
            'stream-analysis',
            {
                'spec': format_stream_spec(stream),
                'prefix': n,
                'max_qp': max_length,
                'order': order.value,
                'budget': budget,
            },
            results,
            {
                'quasiperiod_verdict': report.verdict.provenance,
                'lyndon': 'EVIDENCE',
                'exact_decision': exact.verdict.provenance if exact else None,
            },
        )

    def decide_report(self, directive_text: str) -> dict:
        seq = parse_directive(directive_text)
        decision = sturmian.decide(seq)
        results = {
            'decision': decision.to_dict(),
            'standard': sturmian.is_standard(seq),
            'generators': format_generator_word(
                sturmian.directive_to_generators(seq, seq.defining_pair_count)
            ),
        }
        return envelope(
            'sturmian-decide',
            {'directive': format_directive(seq)},
            results,
            {'verdict': decision.verdict.provenance},
        )

    def generate_report(self, directive_text: str, prefix_length: int = None, budget: int = None) -> dict:
        seq = parse_directive(directive_text)
        n = self.prefix_length if prefix_length is None else prefix_length
        budget = self.pair_budget if budget is None else budget
        prefix = sturmian.sturmian_prefix_text(seq, n, budget)
        return envelope(
            'sturmian-generate',
            {'directive': format_directive(seq), 'prefix': n, 'budget': budget},
            {'prefix': prefix},
            {'prefix': 'STABLE_COMMON_PREFIX'},
        )

    def classify_report(self, generators_text: str) -> dict:
        gw = parse_generator_word(generators_text)
        normalized = morphisms.normalize_E(gw)
        core = normalized.core
        witness = classify_service.forbidden_witness(core, cap=self.closure_cap)
        results = {
            'morphism': morphisms.morphism_of(gw).to_dict(),
            'normalized': normalized.to_dict(),
            'classification': classify_service.classify(gw, cap=self.closure_cap).value,
            'on_sturmian': classify_service.classify_on_sturmian(gw, cap=self.closure_cap).value,
            'witness': witness.to_dict() if witness else None,
            'closure': [m.to_dict() for m in morphisms.relation_closure(core, cap=self.closure_cap)],
            'preserves_lyndon': {
                o.value: lyndon.preserves_lyndon(gw, o, cap=self.closure_cap) for o in LetterOrder
            },
        }
        return envelope(
            'morphism-classify',
            {'generators': format_generator_word(gw)},
            results,
            {'classification': 'EXACT'},
        )

    def apply_report(self, generators_text: str, word_text: str) -> dict:
        gw = parse_generator_word(generators_text)
        word = FiniteWord(word_text)
        morphism = morphisms.morphism_of(gw)
        return envelope(
            'morphism-apply',
            {'generators': format_generator_word(gw), 'word': word.letters},
            {'morphism': morphism.to_dict(), 'image': morphisms.apply(morphism, word).letters},
            {'image': 'EXACT'},
        )

    def normalize_report(self, generators_text: str) -> dict:
        gw = parse_generator_word(generators_text)
        normalized = morphisms.normalize_E(gw)
        return envelope(
            'morphism-normalize',
            {'generators': format_generator_word(gw)},
            normalized.to_dict(),
            {'normalization': 'EXACT'},
        )

    def equal_report(self, left_text: str, right_text: str) -> dict:
        left = parse_generator_word(left_text)
        right = parse_generator_word(right_text)
        left_norm = morphisms.normalize_E(left)
        right_norm = morphisms.normalize_E(right)
        same_class = (
            left_norm.flip == right_norm.flip
            and right_norm.core in morphisms.relation_closure(left_norm.core, cap=self.closure_cap)
        )
        return envelope(
            'morphism-equal',
            {'left': format_generator_word(left), 'right': format_generator_word(right)},
            {
                'equal': morphisms.morphisms_equal(left, right),
                'related_by_rewriting': same_class,
                'left_morphism': morphisms.morphism_of(left).to_dict(),
                'right_morphism': morphisms.morphism_of(right).to_dict(),
            },
            {'equal': 'EXACT'},
        )


def verdict_badge(verdict: str) -> str:
    return {
        Verdict.EVIDENCE_QUASIPERIODIC.value: '🔎',
        Verdict.NO_QUASIPERIOD_DETECTED.value: '∅',
        Verdict.EXACT_QUASIPERIODIC.value: '✅',
        Verdict.EXACT_NON_QUASIPERIODIC.value: '✅',
    }.get(verdict, '•')
