"""Value-level specifications of infinite words.

A stream is never materialised; services.core_words.stream_prefix turns a
spec into a finite prefix of any requested length.
"""

from dataclasses import dataclass
from typing import Optional, Union

from models.directive import DirectiveSequence
from models.morphism import BinaryMorphism, GeneratorWord
from models.words import FiniteWord, Letter
from utils.errors import EmptyInput


@dataclass(frozen=True)
class Periodic:
    head: FiniteWord
    cycle: FiniteWord

    def __post_init__(self):
        if self.cycle.is_empty:
            raise EmptyInput('periodic cycle')


@dataclass(frozen=True)
class FixedPoint:
    morphism: BinaryMorphism
    seed: Letter = Letter.A


@dataclass(frozen=True)
class Directive:
    seq: DirectiveSequence


@dataclass(frozen=True)
class MorphicImage:
    morphism: BinaryMorphism
    inner: 'WordStream'
    # kept for printing when the morphism was given as generators
    generators: Optional[GeneratorWord] = None


@dataclass(frozen=True)
class ThueMorse:
    pass


@dataclass(frozen=True)
class Fibonacci:
    pass


WordStream = Union[Periodic, FixedPoint, Directive, MorphicImage, ThueMorse, Fibonacci]

THUE_MORSE_MORPHISM = BinaryMorphism(FiniteWord('ab'), FiniteWord('ba'))
FIBONACCI_MORPHISM = BinaryMorphism(FiniteWord('ab'), FiniteWord('a'))
