from dataclasses import dataclass
from enum import Enum
from typing import Union

from utils.errors import InvalidCharacter

_EXCHANGE = str.maketrans('ab', 'ba')


class Letter(str, Enum):
    A = 'a'
    B = 'b'

    @property
    def exchanged(self) -> 'Letter':
        return Letter.B if self is Letter.A else Letter.A


class LetterOrder(Enum):
    """Total order on the alphabet; drives lexicographic comparison."""
    A_BEFORE_B = 'ab'
    B_BEFORE_A = 'ba'

    @property
    def symbol(self) -> str:
        return 'a<b' if self is LetterOrder.A_BEFORE_B else 'b<a'

    def key(self, text: str) -> str:
        """Rewrite text so that plain string comparison follows this order."""
        return text if self is LetterOrder.A_BEFORE_B else text.translate(_EXCHANGE)

    @classmethod
    def parse(cls, text: str) -> 'LetterOrder':
        return cls(text.strip().lower())


@dataclass(frozen=True)
class FiniteWord:
    """A finite word over {a, b}, stored as its ASCII text."""
    letters: str = ''

    def __post_init__(self):
        for position, char in enumerate(self.letters):
            if char != 'a' and char != 'b':
                raise InvalidCharacter(position, char)

    @classmethod
    def of(cls, value: 'WordLike') -> 'FiniteWord':
        if isinstance(value, FiniteWord):
            return value
        if isinstance(value, Letter):
            return cls(value.value)
        return cls(value)

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return FiniteWord(self.letters[item])
        return Letter(self.letters[item])

    def __add__(self, other: 'WordLike') -> 'FiniteWord':
        return FiniteWord(self.letters + FiniteWord.of(other).letters)

    def __str__(self):
        return self.letters

    def __repr__(self):
        return f'<FiniteWord {self.letters!r}>'

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def exchanged(self) -> 'FiniteWord':
        """Image under E (a and b swapped)."""
        return FiniteWord(self.letters.translate(_EXCHANGE))

    def startswith(self, prefix: 'WordLike') -> bool:
        return self.letters.startswith(FiniteWord.of(prefix).letters)

    def to_dict(self):
        return self.letters


WordLike = Union[FiniteWord, Letter, str]


def text_of(value: WordLike) -> str:
    """Validated ASCII text of a word-like value."""
    return FiniteWord.of(value).letters
