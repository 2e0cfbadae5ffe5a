"""
Explicit complements for subsets covered by the small-subset lemmas.

Each recipe builds a complement inside H = <A> and lifts it to G through
coset representatives of H. Inputs that miss the identity are first
translated on the left so they contain it; the complement of u^-1 A is a
complement of A as well.
"""
import logging
from typing import Iterable

from factorlab.exceptions import (
    NotAFactorOfH,
    NotASubgroup,
    NotElementaryAbelian2,
    NotElementaryAbelian3,
    OddOrder,
    WrongSize,
)
from groups.tables import (
    GroupTable,
    element_order,
    generated_subgroup,
    is_subgroup,
    left_coset_representatives,
)
from subsets.algebra import normalize_to_identity, product_check
from subsets.bitsets import Subset

logger = logging.getLogger(__name__)


def lift_complement(g: GroupTable, h: Subset, a: Subset, b_prime: Subset) -> Subset:
    """B = B'B'' where B'' picks one element from every coset Hx."""
    if not is_subgroup(g, h):
        raise NotASubgroup(f"{g.format_subset(h)} is not a subgroup of {g.label}")
    if not (a.issubset(h) and b_prime.issubset(h)):
        raise NotAFactorOfH(f"{g.format_subset(a)} and {g.format_subset(b_prime)} must lie in {g.format_subset(h)}")
    check = product_check(g, a, b_prime)
    if not (check.unique and check.covers(h)):
        raise NotAFactorOfH(
            f"{g.format_subset(b_prime)} is not a complement of {g.format_subset(a)} in {g.format_subset(h)}"
        )

    rows = g.rows
    representatives = left_coset_representatives(g, h)
    lifted = Subset.from_indices(g.order, (rows[b][r] for b in b_prime for r in representatives))
    assert len(lifted) == len(b_prime) * (g.order // len(h))
    return lifted


def _subset(g: GroupTable, elements: Iterable[int]) -> Subset:
    return Subset.from_indices(g.order, elements)


def _with_identity(g: GroupTable, a: Subset) -> Subset:
    if 0 in a:
        return a
    normalized = normalize_to_identity(g, a)
    logger.debug(f"Translated {g.format_subset(a)} to {g.format_subset(normalized)}")
    return normalized


def _has_exponent(g: GroupTable, p: int) -> bool:
    return all(element_order(g, x) == p for x in range(1, g.order))


def complement_for_order2_subset(g: GroupTable, x: int) -> Subset:
    """Complement of {e, x} built from the even powers of x."""
    n = element_order(g, x)
    if n % 2:
        raise OddOrder(g.name(x), n)
    a = _subset(g, (0, x))
    h = generated_subgroup(g, a)
    b_prime = _subset(g, (g.power(x, 2 * i) for i in range(n // 2)))
    return lift_complement(g, h, a, b_prime)


def complement_for_4subset_elem2(g: GroupTable, a: Subset) -> Subset:
    if not _has_exponent(g, 2):
        raise NotElementaryAbelian2(f"{g.label} is not an elementary abelian 2-group")
    if len(a) != 4:
        raise WrongSize(4, len(a))
    a = _with_identity(g, a)
    x, y, z = [element for element in a if element != 0]
    h = generated_subgroup(g, a)
    t = g.mul(g.mul(x, y), z)
    if t == 0:
        # z = xy, so A is itself a subgroup.
        b_prime = _subset(g, left_coset_representatives(g, a, within=h))
    else:
        b_prime = _subset(g, (0, t))
    return lift_complement(g, h, a, b_prime)


def complement_for_3subset_elem3(g: GroupTable, a: Subset) -> Subset:
    if not _has_exponent(g, 3):
        raise NotElementaryAbelian3(f"{g.label} is not an elementary abelian 3-group")
    if len(a) != 3:
        raise WrongSize(3, len(a))
    a = _with_identity(g, a)
    x, y = [element for element in a if element != 0]
    h = generated_subgroup(g, a)
    if len(h) == 3:
        b_prime = _subset(g, (0,))
    else:
        t = g.mul(x, y)
        b_prime = _subset(g, (0, t, g.mul(t, t)))
    return lift_complement(g, h, a, b_prime)
