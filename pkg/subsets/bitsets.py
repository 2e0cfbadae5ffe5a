"""
Subsets of a finite group stored as a single integer bit vector.

Bit i is set when element index i belongs to the subset. Group orders are
capped at 64, so every subset fits one machine word.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Tuple


@dataclass(frozen=True)
class Subset:
    bits: int
    order: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.order:
            raise ValueError(f"bits {self.bits:#x} do not fit a group of order {self.order}")

    @classmethod
    def from_indices(cls, order: int, indices: Iterable[int]) -> "Subset":
        bits = 0
        for index in indices:
            if not 0 <= index < order:
                raise ValueError(f"element index {index} outside 0..{order - 1}")
            bits |= 1 << index
        return cls(bits, order)

    @classmethod
    def empty(cls, order: int) -> "Subset":
        return cls(0, order)

    @classmethod
    def full(cls, order: int) -> "Subset":
        return cls((1 << order) - 1, order)

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.order and bool(self.bits >> index & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: "Subset") -> "Subset":
        return Subset(self.bits | other.bits, self.order)

    def __and__(self, other: "Subset") -> "Subset":
        return Subset(self.bits & other.bits, self.order)

    def __sub__(self, other: "Subset") -> "Subset":
        return Subset(self.bits & ~other.bits, self.order)

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(self)

    @property
    def smallest(self) -> int:
        if not self.bits:
            raise ValueError("empty subset has no smallest element")
        return (self.bits & -self.bits).bit_length() - 1

    def is_disjoint(self, other: "Subset") -> bool:
        return not self.bits & other.bits

    def issubset(self, other: "Subset") -> bool:
        return not self.bits & ~other.bits

    def with_element(self, index: int) -> "Subset":
        return Subset(self.bits | 1 << index, self.order)

    def without_element(self, index: int) -> "Subset":
        return Subset(self.bits & ~(1 << index), self.order)

    def lex_key(self) -> Tuple[int, ...]:
        """Sort key matching itertools.combinations order."""
        return self.indices

    def __repr__(self) -> str:
        return f"Subset({{{', '.join(map(str, self))}}}, order={self.order})"


@dataclass(frozen=True)
class ProductCheck:
    """Outcome of multiplying two subsets element by element.

    `first_collision` is (x, (a, b), (a2, b2)) with a*b == a2*b2 == x, taken in
    lexicographic scan order over (a, b) pairs.
    """

    coverage: Subset
    unique: bool
    first_collision: Optional[Tuple[int, Tuple[int, int], Tuple[int, int]]] = None

    def covers(self, target: Subset) -> bool:
        return self.coverage == target

    @property
    def is_factorization(self) -> bool:
        return self.unique and self.coverage.bits == (1 << self.coverage.order) - 1
