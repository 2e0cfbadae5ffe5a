"""
Translation, products with multiplicity, normalisation and Lagrange-subset
enumeration over a GroupTable.
"""
import itertools
from typing import Dict, Iterator, Tuple

from factorlab.exceptions import EmptySubset, NotLagrange
from groups.tables import GroupTable

from .bitsets import ProductCheck, Subset


def translate_left(g: GroupTable, u: int, a: Subset) -> Subset:
    """uA"""
    row = g.rows[u]
    bits = 0
    for x in a:
        bits |= 1 << row[x]
    return Subset(bits, g.order)


def translate_right(g: GroupTable, a: Subset, v: int) -> Subset:
    """Av"""
    rows = g.rows
    bits = 0
    for x in a:
        bits |= 1 << rows[x][v]
    return Subset(bits, g.order)


def product_check(g: GroupTable, a: Subset, b: Subset) -> ProductCheck:
    """Multiply every (a, b) pair and report AB and whether all products differ."""
    if not a:
        raise EmptySubset("product_check")
    if not b:
        raise EmptySubset("product_check")
    rows = g.rows
    right = list(b)
    owners: Dict[int, Tuple[int, int]] = {}
    collision = None
    for x in a:
        row = rows[x]
        for y in right:
            z = row[y]
            if z in owners:
                if collision is None:
                    collision = (z, owners[z], (x, y))
            else:
                owners[z] = (x, y)
    coverage = Subset.from_indices(g.order, owners)
    unique = collision is None
    assert not unique or len(coverage) == len(a) * len(b)
    return ProductCheck(coverage, unique, collision)


def normalize_to_identity(g: GroupTable, a: Subset) -> Subset:
    """u^-1 A for u the smallest element of A; the result contains e."""
    if not a:
        raise EmptySubset("normalize_to_identity")
    return translate_left(g, g.inverses[a.smallest], a)


def subsets_containing_identity(order: int, size: int) -> Iterator[Subset]:
    """Every size-element subset containing index 0, in lexicographic order."""
    for rest in itertools.combinations(range(1, order), size - 1):
        bits = 1
        for x in rest:
            bits |= 1 << x
        yield Subset(bits, order)


def enumerate_lagrange_subsets(g: GroupTable, d: int) -> Iterator[Subset]:
    """One representative per left-translation class of size-d subsets.

    Yields the C(n-1, d-1) subsets that contain the identity.
    """
    if d < 1 or g.order % d:
        raise NotLagrange(d, g.order)
    return subsets_containing_identity(g.order, d)


def divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]
