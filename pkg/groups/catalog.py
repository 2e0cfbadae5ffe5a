"""
Catalog of small groups: every group of order at most 12 up to
isomorphism, plus C16, C2^4 and C3^3 for lemma stress tests.
"""
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional

from .specs import parse_group_spec
from .tables import GroupTable, _is_prime


@dataclass(frozen=True)
class CatalogEntry:
    expression: str
    order: int
    stress_only: bool = False


CATALOG = (
    CatalogEntry("C1", 1),
    CatalogEntry("C2", 2),
    CatalogEntry("C3", 3),
    CatalogEntry("C4", 4),
    CatalogEntry("C2^2", 4),
    CatalogEntry("C5", 5),
    CatalogEntry("C6", 6),
    CatalogEntry("S3", 6),
    CatalogEntry("C7", 7),
    CatalogEntry("C8", 8),
    CatalogEntry("C4xC2", 8),
    CatalogEntry("C2^3", 8),
    CatalogEntry("D4", 8),
    CatalogEntry("Q8", 8),
    CatalogEntry("C9", 9),
    CatalogEntry("C3^2", 9),
    CatalogEntry("C10", 10),
    CatalogEntry("D5", 10),
    CatalogEntry("C11", 11),
    CatalogEntry("C12", 12),
    CatalogEntry("C2xC6", 12),
    CatalogEntry("D6", 12),
    CatalogEntry("Dic3", 12),
    CatalogEntry("A4", 12),
    CatalogEntry("C16", 16, stress_only=True),
    CatalogEntry("C2^4", 16, stress_only=True),
    CatalogEntry("C3^3", 27, stress_only=True),
)

# Nontrivial groups with the strong CFS property besides prime cyclic groups
THEOREM_EXCEPTIONAL = frozenset({"C4", "C2^2", "C2^3", "C3^2"})

_PRIME_CYCLIC_RE = re.compile(r"^C(\d+)$")


@lru_cache(maxsize=None)
def load(expression: str) -> GroupTable:
    return parse_group_spec(expression)


def catalog_entries(max_order: Optional[int] = None, include_stress: bool = True) -> List[CatalogEntry]:
    return [
        entry for entry in CATALOG
        if (max_order is None or entry.order <= max_order) and (include_stress or not entry.stress_only)
    ]


def expected_strong_cfs(expression: str) -> bool:
    """Whether the classification theorem predicts the strong CFS property."""
    if expression in THEOREM_EXCEPTIONAL:
        return True
    match = _PRIME_CYCLIC_RE.match(expression)
    return bool(match) and _is_prime(int(match.group(1)))
