"""
Orbit pruning for Lagrange-subset scans.

Left factor status is unchanged by A -> xAy (translations on either side,
which include conjugation) and, in abelian groups, by A -> A^-1. Subsets
are visited in lexicographic order, so the first member seen of each orbit
is its lexicographically smallest identity-containing member.
"""
from typing import List, Optional, Set

from groups.tables import GroupTable
from subsets.bitsets import Subset


class OrbitPruner:
    def __init__(self, g: GroupTable):
        self.g = g
        self.seen: Set[int] = set()

    def _two_sided(self, members: List[int]) -> Set[int]:
        rows, inverses = self.g.rows, self.g.inverses
        found = set()
        for y in range(self.g.order):
            shifted = [rows[a][y] for a in members]
            for ay in shifted:
                x = inverses[ay]
                row = rows[x]
                bits = 0
                for z in shifted:
                    bits |= 1 << row[z]
                found.add(bits)
        return found

    def orbit(self, a: Subset) -> List[Subset]:
        """Identity-containing members of the orbit of a, in lexicographic order."""
        found = self._two_sided(list(a))
        if self.g.is_abelian:
            inverses = self.g.inverses
            found |= self._two_sided([inverses[x] for x in a])
        members = [Subset(bits, self.g.order) for bits in found]
        return sorted(members, key=Subset.lex_key)

    def visit(self, a: Subset) -> Optional[List[Subset]]:
        """The orbit of a on first contact, None if a was already covered."""
        if a.bits in self.seen:
            return None
        members = self.orbit(a)
        self.seen.update(member.bits for member in members)
        return members
