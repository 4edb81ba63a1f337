from dataclasses import dataclass
from typing import Iterator, List, Tuple

from utils.errors import InputError


@dataclass(frozen=True)
class Block:
    """One (d, c) block of a directive sequence."""
    d: int
    c: int

    def __post_init__(self):
        if self.c < 0 or self.d < self.c:
            raise InputError(f'Block ({self.d},{self.c}) must satisfy d >= c >= 0')

    def __str__(self):
        return f'({self.d},{self.c})'


BlockPair = Tuple[Block, Block]


@dataclass(frozen=True)
class DirectiveSequence:
    """Eventually periodic sequence of block pairs (a-type block, b-type block)."""
    preperiod: Tuple[BlockPair, ...]
    period: Tuple[BlockPair, ...]

    def __post_init__(self):
        if not self.period:
            raise InputError('Directive period must contain at least one block pair')

    @classmethod
    def from_pairs(cls, preperiod, period) -> 'DirectiveSequence':
        """Build from nested ((d, c), (d, c)) integer tuples."""
        def pairs(raw):
            return tuple((Block(*a_block), Block(*b_block)) for a_block, b_block in raw)
        return cls(pairs(preperiod), pairs(period))

    def pair(self, index: int) -> BlockPair:
        """The block pair at 0-based position `index` of the infinite sequence."""
        if index < len(self.preperiod):
            return self.preperiod[index]
        return self.period[(index - len(self.preperiod)) % len(self.period)]

    def pairs(self) -> Iterator[BlockPair]:
        """Endless iterator over block pairs."""
        index = 0
        while True:
            yield self.pair(index)
            index += 1

    def blocks(self, pair_count: int) -> List[Block]:
        """Blocks k = 1 .. 2*pair_count, flattened."""
        flat = []
        for index in range(pair_count):
            flat.extend(self.pair(index))
        return flat

    @property
    def defining_pair_count(self) -> int:
        """Preperiod plus one full period."""
        return len(self.preperiod) + len(self.period)

    def to_dict(self):
        def encode(pairs):
            return [[[a.d, a.c], [b.d, b.c]] for a, b in pairs]
        return {'preperiod': encode(self.preperiod), 'period': encode(self.period)}
