"""Quasiperiodicity classes of Sturmian morphisms.

Membership in a shape is decided over the whole relation-closure class, since a
morphism may have several generator spellings. Generator words are handled as
code strings here: A=La, B=Lb, C=Ra, D=Rb.
"""

import logging
import re
from typing import Optional

from config import Config
from models.morphism import GeneratorWord
from models.reports import (
    Classification, ForbiddenWitness, OnSturmianClassification, PatternId, Shape,
)
from services.morphisms import closure_codes, normalize_E
from utils.errors import InputError

logger = logging.getLogger(__name__)

SHAPE_PATTERNS = {
    # {La,Rb}*{La,Ra}* ∪ {Lb,Ra}*{Lb,Rb}*
    Shape.WEAK_SHAPE: re.compile(r'[AD]*[AC]*|[BC]*[BD]*'),
    # {La,Rb}* ∪ {Lb,Ra}*
    Shape.WEAK_ON_STURMIAN_SHAPE: re.compile(r'[AD]*|[BC]*'),
    # {La,Rb}*
    Shape.LYNDON_SHAPE: re.compile(r'[AD]*'),
}

FORBIDDEN_PATTERNS = (
    # La ... Lb, Lb ... La
    (PatternId.P1, re.compile(r'A.*B|B.*A')),
    # Ra g La with g not in {Ra, La}*, and the letter-exchanged form
    (PatternId.P2, re.compile(r'C.*[BD].*A|D.*[AC].*B')),
    # Ra Rb+ Ra, Rb Ra+ Rb
    (PatternId.P3, re.compile(r'CD+C|DC+D')),
    # Ra+ La+ Rb = La+ Ra+ Rb, and the letter-exchanged forms
    (PatternId.P4, re.compile(r'C+A+D|A+C+D|D+B+C|B+D+C')),
)


def _require_core(core: GeneratorWord):
    if core.has_e:
        raise InputError('Expected an E-free generator word; normalize first')


def shape_member(core: GeneratorWord, shape: Shape, cap: int = None) -> bool:
    _require_core(core)
    pattern = SHAPE_PATTERNS[Shape(shape)]
    cap = Config.CLOSURE_CAP if cap is None else cap
    return any(pattern.fullmatch(member) for member in closure_codes(core.code, cap))


def classify(gw: GeneratorWord, cap: int = None) -> Classification:
    core = normalize_E(gw).core
    if not len(core):
        return Classification.QUASIPERIOD_FREE
    if shape_member(core, Shape.WEAK_SHAPE, cap=cap):
        return Classification.WEAKLY_QUASIPERIODIC
    return Classification.STRONGLY_QUASIPERIODIC


def classify_on_sturmian(gw: GeneratorWord, cap: int = None) -> OnSturmianClassification:
    core = normalize_E(gw).core
    if not len(core):
        return OnSturmianClassification.QUASIPERIOD_FREE
    if shape_member(core, Shape.WEAK_ON_STURMIAN_SHAPE, cap=cap):
        return OnSturmianClassification.WEAKLY_ON_STURMIAN
    return OnSturmianClassification.STRONGLY_ON_STURMIAN


def match_forbidden(factor: str) -> Optional[PatternId]:
    for pattern_id, pattern in FORBIDDEN_PATTERNS:
        if pattern.fullmatch(factor):
            return pattern_id
    return None


def forbidden_witness(core: GeneratorWord, cap: int = None) -> Optional[ForbiddenWitness]:
    """First f1·f2·f3 split of a closure member whose middle matches a forbidden pattern.

    Search order: closure members (BFS), split start, split length, pattern id.
    """
    _require_core(core)
    cap = Config.CLOSURE_CAP if cap is None else cap
    for member in closure_codes(core.code, cap):
        n = len(member)
        for start in range(n):
            for end in range(start + 1, n + 1):
                pattern_id = match_forbidden(member[start:end])
                if pattern_id is None:
                    continue
                witness = ForbiddenWitness(
                    pattern_id=pattern_id,
                    split=(
                        GeneratorWord.from_code(member[:start]),
                        GeneratorWord.from_code(member[start:end]),
                        GeneratorWord.from_code(member[end:]),
                    ),
                    representative=GeneratorWord.from_code(member),
                )
                logger.debug(f"Forbidden pattern {pattern_id.value} in {member}[{start}:{end}]")
                return witness
    return None
