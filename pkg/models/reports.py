from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from models.morphism import GeneratorWord
from models.words import FiniteWord, LetterOrder


class Verdict(Enum):
    EVIDENCE_QUASIPERIODIC = 'EVIDENCE_QUASIPERIODIC'
    NO_QUASIPERIOD_DETECTED = 'NO_QUASIPERIOD_DETECTED'
    EXACT_QUASIPERIODIC = 'EXACT_QUASIPERIODIC'
    EXACT_NON_QUASIPERIODIC = 'EXACT_NON_QUASIPERIODIC'

    @property
    def is_exact(self) -> bool:
        return self in (Verdict.EXACT_QUASIPERIODIC, Verdict.EXACT_NON_QUASIPERIODIC)

    @property
    def provenance(self) -> str:
        return 'EXACT' if self.is_exact else 'EVIDENCE'


@dataclass(frozen=True)
class QuasiperiodEvidence:
    quasiperiod: FiniteWord
    covered_length: int

    def to_dict(self):
        return {'quasiperiod': self.quasiperiod.letters, 'covered_length': self.covered_length}


@dataclass(frozen=True)
class QuasiperiodReport:
    prefix_length_analyzed: int
    candidates_bound: int
    found: Tuple[QuasiperiodEvidence, ...]
    verdict: Verdict

    @property
    def smallest(self) -> Optional[FiniteWord]:
        return self.found[0].quasiperiod if self.found else None

    @property
    def quasiperiods(self) -> List[str]:
        return [item.quasiperiod.letters for item in self.found]

    def to_dict(self):
        return {
            'prefix_length_analyzed': self.prefix_length_analyzed,
            'candidates_bound': self.candidates_bound,
            'found': [item.to_dict() for item in self.found],
            'smallest': self.smallest.letters if self.smallest is not None else None,
            'verdict': self.verdict.value,
        }


@dataclass(frozen=True)
class ExactDecision:
    """Exact verdict for a directive sequence, plus the matching Lyndon order."""
    verdict: Verdict
    lyndon_order: Optional[LetterOrder]

    def to_dict(self):
        return {
            'verdict': self.verdict.value,
            'lyndon_order': self.lyndon_order.value if self.lyndon_order else None,
        }


class LyndonOutcome(Enum):
    CONSISTENT = 'CONSISTENT'
    REFUTED = 'REFUTED'


@dataclass(frozen=True)
class LyndonStatus:
    outcome: LyndonOutcome
    position: Optional[int] = None

    @classmethod
    def consistent(cls) -> 'LyndonStatus':
        return cls(LyndonOutcome.CONSISTENT)

    @classmethod
    def refuted(cls, position: int) -> 'LyndonStatus':
        return cls(LyndonOutcome.REFUTED, position)

    @property
    def is_consistent(self) -> bool:
        return self.outcome is LyndonOutcome.CONSISTENT

    def to_dict(self):
        return {'outcome': self.outcome.value, 'position': self.position}


@dataclass(frozen=True)
class Violation:
    block_index: int
    message: str

    def to_dict(self):
        return {'block_index': self.block_index, 'message': self.message}


@dataclass(frozen=True)
class ShapeReport:
    conforms: bool
    i: int
    n: int
    predicted_quasiperiod: Optional[FiniteWord] = None

    def to_dict(self):
        return {
            'conforms': self.conforms,
            'i': self.i,
            'n': self.n,
            'predicted_quasiperiod': (
                self.predicted_quasiperiod.letters if self.predicted_quasiperiod is not None else None
            ),
        }


class Classification(Enum):
    QUASIPERIOD_FREE = 'QUASIPERIOD_FREE'
    WEAKLY_QUASIPERIODIC = 'WEAKLY_QUASIPERIODIC'
    STRONGLY_QUASIPERIODIC = 'STRONGLY_QUASIPERIODIC'


class OnSturmianClassification(Enum):
    QUASIPERIOD_FREE = 'QUASIPERIOD_FREE'
    WEAKLY_ON_STURMIAN = 'WEAKLY_ON_STURMIAN'
    STRONGLY_ON_STURMIAN = 'STRONGLY_ON_STURMIAN'


class Shape(Enum):
    WEAK_SHAPE = 'WEAK_SHAPE'
    WEAK_ON_STURMIAN_SHAPE = 'WEAK_ON_STURMIAN_SHAPE'
    LYNDON_SHAPE = 'LYNDON_SHAPE'


class PatternId(Enum):
    P1 = 'P1'
    P2 = 'P2'
    P3 = 'P3'
    P4 = 'P4'


@dataclass(frozen=True)
class ForbiddenWitness:
    pattern_id: PatternId
    split: Tuple[GeneratorWord, GeneratorWord, GeneratorWord]
    representative: GeneratorWord

    @property
    def f2(self) -> GeneratorWord:
        return self.split[1]

    def to_dict(self):
        f1, f2, f3 = self.split
        return {
            'pattern_id': self.pattern_id.value,
            'f1': f1.to_dict(),
            'f2': f2.to_dict(),
            'f3': f3.to_dict(),
            'representative': self.representative.to_dict(),
        }


@dataclass
class CheckResult:
    id: str
    description: str
    passed: bool
    details: str = ''

    def to_dict(self):
        return {
            'id': self.id,
            'description': self.description,
            'passed': self.passed,
            'details': self.details,
        }


@dataclass
class VerifyOutcome:
    """Container for one verify suite run."""
    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed_count(self) -> int:
        return sum(1 for check in self.checks if check.passed)

    @property
    def failed_count(self) -> int:
        return len(self.checks) - self.passed_count

    @property
    def all_passed(self) -> bool:
        return self.failed_count == 0

    def to_dict(self):
        return {
            'suite': self.suite,
            'checks': [check.to_dict() for check in self.checks],
            'passed': self.passed_count,
            'failed': self.failed_count,
        }
