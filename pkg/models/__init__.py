from models.words import FiniteWord, Letter, LetterOrder, WordLike
from models.morphism import BinaryMorphism, Generator, GeneratorWord, NormalizedWord
from models.directive import Block, DirectiveSequence
from models.streams import (
    Directive, Fibonacci, FixedPoint, MorphicImage, Periodic, ThueMorse, WordStream,
)
from models.reports import (
    CheckResult, Classification, ExactDecision, ForbiddenWitness, LyndonOutcome, LyndonStatus,
    OnSturmianClassification, PatternId, QuasiperiodEvidence, QuasiperiodReport, Shape,
    ShapeReport, Verdict, VerifyOutcome, Violation,
)
