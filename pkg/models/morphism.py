from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple

from models.words import FiniteWord, WordLike
from utils.errors import EmptyInput


class Generator(Enum):
    """The five Sturmian generator morphisms."""
    E = 'E'
    LA = 'La'
    LB = 'Lb'
    RA = 'Ra'
    RB = 'Rb'

    @property
    def code(self) -> str:
        """Single-character code used by the rewriting and pattern engines."""
        return _CODES[self]

    @property
    def exchanged(self) -> 'Generator':
        """Conjugate by E: swaps the letter subscript, E stays E."""
        return _EXCHANGED[self]

    @classmethod
    def from_code(cls, code: str) -> 'Generator':
        return _FROM_CODE[code]

    def __str__(self):
        return self.value


_CODES = {
    Generator.LA: 'A',
    Generator.LB: 'B',
    Generator.RA: 'C',
    Generator.RB: 'D',
    Generator.E: 'E',
}
_FROM_CODE = {code: gen for gen, code in _CODES.items()}
_EXCHANGED = {
    Generator.E: Generator.E,
    Generator.LA: Generator.LB,
    Generator.LB: Generator.LA,
    Generator.RA: Generator.RB,
    Generator.RB: Generator.RA,
}


@dataclass(frozen=True)
class GeneratorWord:
    """g1 g2 ... gn, denoting g1 ∘ g2 ∘ ... ∘ gn (rightmost applied first)."""
    gens: Tuple[Generator, ...] = ()

    @classmethod
    def of(cls, gens: Iterable[Generator]) -> 'GeneratorWord':
        return cls(tuple(gens))

    @classmethod
    def from_code(cls, code: str) -> 'GeneratorWord':
        return cls(tuple(Generator.from_code(c) for c in code))

    @property
    def code(self) -> str:
        return ''.join(g.code for g in self.gens)

    @property
    def has_e(self) -> bool:
        return Generator.E in self.gens

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return GeneratorWord(self.gens[item])
        return self.gens[item]

    def __add__(self, other: 'GeneratorWord') -> 'GeneratorWord':
        return GeneratorWord(self.gens + tuple(other.gens))

    def __str__(self):
        return ' '.join(g.value for g in self.gens) if self.gens else 'Id'

    def to_dict(self):
        return [g.value for g in self.gens]


@dataclass(frozen=True)
class BinaryMorphism:
    """A non-erasing morphism on {a, b}, given by its two letter images."""
    image_a: FiniteWord
    image_b: FiniteWord

    def __post_init__(self):
        # accept plain strings for convenience
        object.__setattr__(self, 'image_a', FiniteWord.of(self.image_a))
        object.__setattr__(self, 'image_b', FiniteWord.of(self.image_b))
        if self.image_a.is_empty or self.image_b.is_empty:
            raise EmptyInput('letter image (morphisms are non-erasing)')

    @classmethod
    def from_images(cls, image_a: WordLike, image_b: WordLike) -> 'BinaryMorphism':
        return cls(FiniteWord.of(image_a), FiniteWord.of(image_b))

    @classmethod
    def identity(cls) -> 'BinaryMorphism':
        return cls(FiniteWord('a'), FiniteWord('b'))

    @property
    def table(self) -> dict:
        """str.translate table mapping each letter to its image."""
        return {ord('a'): self.image_a.letters, ord('b'): self.image_b.letters}

    def image_of(self, letter: str) -> FiniteWord:
        return self.image_a if letter == 'a' else self.image_b

    def __str__(self):
        return f'a->{self.image_a}, b->{self.image_b}'

    def to_dict(self):
        return {'a': self.image_a.letters, 'b': self.image_b.letters}


@dataclass(frozen=True)
class NormalizedWord:
    """E-free core plus whether one trailing E remains."""
    core: GeneratorWord
    flip: bool

    def as_generator_word(self) -> GeneratorWord:
        return self.core + GeneratorWord((Generator.E,)) if self.flip else self.core

    def to_dict(self):
        return {'core': self.core.to_dict(), 'flip': self.flip}
