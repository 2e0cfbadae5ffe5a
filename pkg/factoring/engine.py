"""
Factor decisions by exact cover over group translates.

A subset A is a left factor of G when some B makes the translates Ab
(b in B) partition G. The search always branches on the smallest uncovered
element and tries candidate translates in ascending order of b, so results
are reproducible and the first branch point is the identity.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from math import prod
from typing import Iterator, List, Optional, Sequence, Tuple

from factorlab.exceptions import EmptySubset, NotLagrange, SizeMismatch, UnsoundCertificate
from groups.tables import GroupTable
from subsets.algebra import (
    product_check,
    subsets_containing_identity,
    translate_left,
    translate_right,
)
from subsets.bitsets import Subset

logger = logging.getLogger(__name__)


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class Reason(str, Enum):
    COMPLEMENT_FOUND = "complement-found"
    EXHAUSTED = "exhausted"
    SIZE_NOT_DIVIDING = "size-not-dividing"
    NODE_BUDGET = "node-budget"


class NodeBudgetExceeded(Exception):
    pass


class NodeCounter:
    """Counts search nodes and enforces an optional budget."""

    def __init__(self, budget: Optional[int] = None):
        self.count = 0
        self.budget = budget

    def tick(self):
        self.count += 1
        if self.budget is not None and self.count > self.budget:
            raise NodeBudgetExceeded(self.count)


@dataclass(frozen=True)
class FactorResult:
    is_factor: bool
    complement: Optional[Subset]
    side: Side
    nodes_explored: int
    exhausted: bool
    reason: Reason

    @property
    def verdict(self) -> str:
        if self.is_factor:
            return "factor"
        return "not-factor" if self.exhausted else "unknown"


@dataclass(frozen=True)
class ComplementSet:
    """Translation-class representatives of every complement of a subset."""

    subset: Subset
    side: Side
    complements: Tuple[Subset, ...]


@dataclass(frozen=True)
class KFactorization:
    """Ordered parts A1..Ak with every element uniquely a1*...*ak."""

    parts: Tuple[Subset, ...]

    @property
    def sizes(self) -> List[int]:
        return [len(part) for part in self.parts]

    def verify(self, g: GroupTable) -> bool:
        rows = g.rows
        products = [0]
        for part in self.parts:
            members = list(part)
            products = [rows[p][x] for p in products for x in members]
        return len(products) == g.order and len(set(products)) == g.order


@dataclass(frozen=True)
class FactorizationResult:
    factorization: Optional[KFactorization]
    sizes: Tuple[int, ...]
    nodes_explored: int
    exhausted: bool

    @property
    def verdict(self) -> str:
        if self.factorization is not None:
            return "exists"
        return "none" if self.exhausted else "unknown"


class TranslateCover:
    """Exact cover of G by the right translates Ab of a fixed subset A.

    Tiles are precomputed as bit masks; the translates containing x are
    exactly A b for b in A^-1 x.
    """

    def __init__(self, g: GroupTable, a: Subset, counter: Optional[NodeCounter] = None):
        rows, inverses = g.rows, g.inverses
        members = list(a)
        self.order = g.order
        self.full = (1 << g.order) - 1
        self.counter = counter or NodeCounter()
        self.tiles = []
        for b in range(g.order):
            bits = 0
            for x in members:
                bits |= 1 << rows[x][b]
            self.tiles.append(bits)
        self.candidates = [
            sorted({rows[inverses[x]][y] for x in members}) for y in range(g.order)
        ]

    def solutions(self) -> Iterator[Tuple[int, ...]]:
        yield from self._search(0, [])

    def _search(self, covered: int, chosen: List[int]) -> Iterator[Tuple[int, ...]]:
        self.counter.tick()
        if covered == self.full:
            yield tuple(chosen)
            return
        x = ((covered + 1) & ~covered).bit_length() - 1
        for b in self.candidates[x]:
            tile = self.tiles[b]
            if tile & covered:
                continue
            chosen.append(b)
            yield from self._search(covered | tile, chosen)
            chosen.pop()


def _oriented(g: GroupTable, side: Side) -> GroupTable:
    # Right factors of G are left factors of the opposite group.
    return g if side is Side.LEFT else g.opposite


def certify(g: GroupTable, a: Subset, complement: Subset, side: Side) -> None:
    check = product_check(g, a, complement) if side is Side.LEFT else product_check(g, complement, a)
    if not check.is_factorization:
        raise UnsoundCertificate(
            f"{g.format_subset(complement)} is not a {side.value} complement of {g.format_subset(a)} in {g.label}"
        )


def decide_factor(g: GroupTable, a: Subset, side: Side = Side.LEFT, node_budget: Optional[int] = None) -> FactorResult:
    side = Side(side)
    if not a:
        raise EmptySubset(f"is_{side.value}_factor")
    if g.order % len(a):
        return FactorResult(False, None, side, 0, True, Reason.SIZE_NOT_DIVIDING)

    cover = TranslateCover(_oriented(g, side), a, NodeCounter(node_budget))
    try:
        solution = next(cover.solutions(), None)
    except NodeBudgetExceeded:
        logger.warning(f"Node budget {node_budget} exhausted deciding {g.format_subset(a)} in {g.label}")
        return FactorResult(False, None, side, cover.counter.count, False, Reason.NODE_BUDGET)

    if solution is None:
        logger.debug(f"{g.format_subset(a)} is not a {side.value} factor of {g.label} ({cover.counter.count} nodes)")
        return FactorResult(False, None, side, cover.counter.count, True, Reason.EXHAUSTED)

    complement = Subset.from_indices(g.order, solution)
    certify(g, a, complement, side)
    logger.debug(f"{g.format_subset(a)} is a {side.value} factor of {g.label} with complement {g.format_subset(complement)}")
    return FactorResult(True, complement, side, cover.counter.count, False, Reason.COMPLEMENT_FOUND)


def is_left_factor(g: GroupTable, a: Subset, node_budget: Optional[int] = None) -> FactorResult:
    return decide_factor(g, a, Side.LEFT, node_budget)


def is_right_factor(g: GroupTable, a: Subset, node_budget: Optional[int] = None) -> FactorResult:
    return decide_factor(g, a, Side.RIGHT, node_budget)


def _class_representative(g: GroupTable, complement: Subset, side: Side) -> Subset:
    """Lexicographically smallest translate of the complement containing e."""
    if side is Side.LEFT:
        translates = (translate_right(g, complement, g.inverses[b]) for b in complement)
    else:
        translates = (translate_left(g, g.inverses[b], complement) for b in complement)
    return min(translates, key=Subset.lex_key)


def find_all_complements(g: GroupTable, a: Subset, side: Side = Side.LEFT) -> List[Subset]:
    """Every complement of A, one identity-containing representative per translation class."""
    side = Side(side)
    if not a:
        raise EmptySubset("find_all_complements")
    if g.order % len(a):
        raise NotLagrange(len(a), g.order)
    cover = TranslateCover(_oriented(g, side), a)
    representatives = {}
    for solution in cover.solutions():
        complement = Subset.from_indices(g.order, solution)
        certify(g, a, complement, side)
        representative = _class_representative(g, complement, side)
        representatives[representative.bits] = representative
    logger.debug(f"{len(representatives)} complement classes for {g.format_subset(a)} ({cover.counter.count} nodes)")
    return sorted(representatives.values(), key=Subset.lex_key)


def find_factorization(g: GroupTable, sizes: Sequence[int], node_budget: Optional[int] = None) -> FactorizationResult:
    """Search for an ordered factorization G = A1...Ak with |Ai| = sizes[i].

    Parts A1..A(k-1) range over identity-containing subsets in
    lexicographic order; the last part comes from an exact cover of G by
    translates of A1...A(k-1).
    """
    sizes = tuple(int(size) for size in sizes)
    if not sizes or any(size < 1 for size in sizes):
        raise SizeMismatch(f"sizes must be positive integers, got {list(sizes)}")
    if prod(sizes) != g.order:
        raise SizeMismatch(f"product of sizes {list(sizes)} is {prod(sizes)}, not |G| = {g.order}")

    counter = NodeCounter(node_budget)
    identity = Subset(1, g.order)

    def extend(prefix: Subset, parts: List[Subset]) -> Optional[KFactorization]:
        if len(parts) == len(sizes) - 1:
            cover = TranslateCover(g, prefix, counter)
            solution = next(cover.solutions(), None)
            if solution is None:
                return None
            last = Subset.from_indices(g.order, solution)
            last = translate_right(g, last, g.inverses[last.smallest])
            return KFactorization(tuple(parts) + (last,))
        for part in subsets_containing_identity(g.order, sizes[len(parts)]):
            counter.tick()
            check = product_check(g, prefix, part)
            if not check.unique:
                continue
            found = extend(check.coverage, parts + [part])
            if found is not None:
                return found
        return None

    try:
        factorization = extend(identity, [])
    except NodeBudgetExceeded:
        logger.warning(f"Node budget {node_budget} exhausted searching {list(sizes)} in {g.label}")
        return FactorizationResult(None, sizes, counter.count, False)

    if factorization is None:
        logger.info(f"{g.label} has no {list(sizes)}-factorization ({counter.count} nodes)")
        return FactorizationResult(None, sizes, counter.count, True)
    if not factorization.verify(g):
        raise UnsoundCertificate(f"factorization {factorization} of {g.label} failed verification")
    return FactorizationResult(factorization, sizes, counter.count, False)
