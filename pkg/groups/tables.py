"""
Finite groups as dense multiplication tables.

Every group is normalised so that element 0 is the identity. Tables are
numpy arrays marked read-only; hot loops read the `rows` tuple instead of
indexing numpy scalars.
"""
import logging
import re
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple, TYPE_CHECKING

import numpy as np

from factorlab.exceptions import NotAGroup, NotASubgroup, NotPrime, OrderOutOfRange
from subsets.bitsets import Subset

if TYPE_CHECKING:  # pragma: no cover
    from .specs import GroupSpec

logger = logging.getLogger(__name__)

MAX_ORDER = 64

# One letter per cyclic generator; `e` is reserved for the identity.
GENERATOR_LETTERS = "abcdfghjklmnpqrstuvwxyz"
_LETTER_RE = re.compile(r"[a-df-z]")


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its Cayley table.

    `table[i][j]` is the index of the product i*j. `letters` lists the
    generator letters used in `names`; it is None for tables loaded from raw
    data, whose names are free-form.
    """

    table: np.ndarray
    names: Tuple[str, ...]
    letters: Optional[Tuple[str, ...]] = ()
    spec: Optional["GroupSpec"] = field(default=None)

    identity = 0

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @cached_property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self.table.tolist())

    @cached_property
    def inverses(self) -> Tuple[int, ...]:
        return tuple(row.index(0) for row in self.rows)

    @cached_property
    def _name_index(self) -> Dict[str, int]:
        return {name: index for index, name in enumerate(self.names)}

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def opposite(self) -> "GroupTable":
        """The opposite group: same elements, x*y computed as y*x."""
        transposed = np.ascontiguousarray(self.table.T)
        transposed.flags.writeable = False
        return GroupTable(transposed, self.names, self.letters, self.spec)

    @property
    def label(self) -> str:
        return self.spec.expression if self.spec is not None else f"<table of order {self.order}>"

    def mul(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def inv(self, x: int) -> int:
        return self.inverses[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverses[x], -k
        result = 0
        for _ in range(k):
            result = self.rows[result][x]
        return result

    def name(self, x: int) -> str:
        return self.names[x]

    def index_of(self, name: str) -> Optional[int]:
        return self._name_index.get(name)

    def subset_names(self, subset: Subset) -> List[str]:
        return [self.names[x] for x in subset]

    def format_subset(self, subset: Subset) -> str:
        return "{" + ",".join(self.subset_names(subset)) + "}"

    def full_subset(self) -> Subset:
        return Subset.full(self.order)

    def has_same_table(self, other: "GroupTable") -> bool:
        return bool(np.array_equal(self.table, other.table))

    def with_spec(self, spec: "GroupSpec") -> "GroupTable":
        return replace(self, spec=spec)

    def serialize(self) -> str:
        """Render in the Cayley-table text format read by `from_cayley_table`."""
        lines = [str(self.order)]
        lines.extend(" ".join(str(v) for v in row) for row in self.rows)
        lines.append(" ".join(self.names))
        return "\n".join(lines) + "\n"


def _freeze(table: np.ndarray) -> np.ndarray:
    frozen = np.array(table, dtype=np.int16, copy=True)
    frozen.flags.writeable = False
    return frozen


def _check_order(order: int) -> None:
    if order < 1 or order > MAX_ORDER:
        raise OrderOutOfRange(order, MAX_ORDER)


def validate_table(table: np.ndarray) -> int:
    """Check the group axioms and return the index of the identity.

    Raises NotAGroup naming the first violated axiom and an offending triple.
    """
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise NotAGroup("table is not a nonempty square matrix")
    n = table.shape[0]
    _check_order(n)
    bad = np.argwhere((table < 0) | (table >= n))
    if bad.size:
        i, j = (int(v) for v in bad[0])
        raise NotAGroup(f"entry {int(table[i, j])} outside 0..{n - 1}", (i, j, int(table[i, j])))

    expected = np.arange(n)
    for axis, label in ((1, "row"), (0, "column")):
        ordered = np.sort(table, axis=axis)
        broken = np.argwhere(~(ordered == (expected if axis == 1 else expected[:, None])).all(axis=axis))
        if broken.size:
            line = int(broken[0][0])
            values = table[line] if axis == 1 else table[:, line]
            seen: Dict[int, int] = {}
            for position, value in enumerate(values.tolist()):
                if value in seen:
                    raise NotAGroup(f"{label} {line} is not a permutation", (line, seen[value], position))
                seen[value] = position

    identities = [
        e for e in range(n)
        if np.array_equal(table[e], expected) and np.array_equal(table[:, e], expected)
    ]
    if not identities:
        raise NotAGroup("no identity element")

    # (x*y)*z against x*(y*z) for every triple at once.
    left = table[table]
    right = table[:, table]
    broken = np.argwhere(left != right)
    if broken.size:
        raise NotAGroup("associativity fails", tuple(int(v) for v in broken[0]))
    return identities[0]


def from_cayley_table(raw, names: Optional[Sequence[str]] = None) -> GroupTable:
    """Validate a raw Cayley table and relabel it so the identity is index 0."""
    try:
        table = np.asarray(raw)
    except ValueError as exc:
        raise NotAGroup(f"table is not a rectangular matrix: {exc}") from exc
    if table.dtype.kind not in "iu":
        try:
            numeric = table.astype(np.float64)
        except (TypeError, ValueError) as exc:
            raise NotAGroup(f"table entries are not integers: {exc}") from exc
        if not (np.isfinite(numeric).all() and np.array_equal(numeric, np.trunc(numeric))):
            raise NotAGroup("table entries are not integers")
        table = numeric.astype(np.int64)
    identity = validate_table(table)
    n = table.shape[0]
    if names is not None and len(names) != n:
        raise NotAGroup(f"expected {n} element names, got {len(names)}")

    if identity != 0:
        relabel = np.arange(n)
        relabel[[0, identity]] = relabel[[identity, 0]]
        # relabel is an involution, so it is its own inverse
        table = relabel[table[np.ix_(relabel, relabel)]]
        if names is not None:
            names = [names[int(i)] for i in relabel]
        logger.debug(f"Relabelled identity {identity} to index 0")

    if names is None:
        names = ["e"] + [f"g{i}" for i in range(1, n)]
    if len(set(names)) != n:
        raise NotAGroup("element names are not distinct")
    return GroupTable(_freeze(table), tuple(str(name) for name in names), None)


def _power_name(letter: str, k: int) -> str:
    if k == 0:
        return ""
    if k == 1:
        return letter
    return f"{letter}^{k}"


def _concat_names(*parts: str) -> str:
    return "".join(p for p in parts if p != "e") or "e"


def _product_names(first: GroupTable, second: GroupTable):
    """Name every pair (x, y) as x followed by y, with y's letters moved past x's.

    Returns (name_of, letters) where name_of(x, y) builds the pair's name.
    Falls back to "(x,y)" when either side has free-form names.
    """
    if (
        first.letters is None
        or second.letters is None
        or len(first.letters) + len(second.letters) > len(GENERATOR_LETTERS)
    ):
        return (lambda x, y: f"({first.names[x]},{second.names[y]})"), None
    offset = len(first.letters)
    shifted = {old: GENERATOR_LETTERS[offset + k] for k, old in enumerate(second.letters)}
    second_names = [_LETTER_RE.sub(lambda m: shifted[m.group()], name) for name in second.names]
    letters = tuple(first.letters) + tuple(shifted[old] for old in second.letters)
    return (lambda x, y: _concat_names(first.names[x], second_names[y])), letters


def build_cyclic(n: int) -> GroupTable:
    """C_n with element i = a^i."""
    _check_order(n)
    powers = np.arange(n)
    table = np.add.outer(powers, powers) % n
    names = ["e"] + [_power_name("a", i) for i in range(1, n)]
    return GroupTable(_freeze(table), tuple(names), ("a",) if n > 1 else ())


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """g x h, element (x, y) at index x*|h| + y."""
    m = h.order
    _check_order(g.order * m)
    big = g.table[:, None, :, None].astype(np.int32) * m + h.table[None, :, None, :]
    n = g.order * m
    name_of, letters = _product_names(g, h)
    names = tuple(name_of(x, y) for x in range(g.order) for y in range(m))
    return GroupTable(_freeze(big.reshape(n, n)), names, letters)


def build_elementary_abelian(p: int, k: int) -> GroupTable:
    """C_p^k as a left-associated direct power; identical to C_p x ... x C_p."""
    if not _is_prime(p):
        raise NotPrime(p)
    if k < 1:
        raise OrderOutOfRange(p ** max(k, 0))
    order = 1
    for _ in range(k):
        order *= p
        if order > MAX_ORDER:
            raise OrderOutOfRange(p ** k)
    group = build_cyclic(p)
    for _ in range(k - 1):
        group = direct_product(group, build_cyclic(p))
    return group


def semidirect_product(normal: GroupTable, top: GroupTable, action: Sequence[Sequence[int]]) -> GroupTable:
    """N x| K with element (n, k) written n*k at index k*|N| + n.

    `action[k]` is the automorphism of N induced by conjugation with k, as a
    permutation of N's indices. A non-homomorphic action is caught by the
    associativity check.
    """
    size_n, size_k = normal.order, top.order
    _check_order(size_n * size_k)
    phi = np.asarray(action, dtype=np.int64)
    if phi.shape != (size_k, size_n):
        raise NotAGroup(f"action must be a {size_k}x{size_n} array of permutations")
    twisted = np.transpose(normal.table[:, phi], (1, 0, 2))  # [k1, n1, n2] -> n1 * phi_k1(n2)
    big = top.table[:, None, :, None].astype(np.int32) * size_n + twisted[:, :, None, :]
    n = size_n * size_k
    table = big.reshape(n, n)
    validate_table(table)
    name_of, letters = _product_names(normal, top)
    names = tuple(name_of(x, k) for k in range(size_k) for x in range(size_n))
    return GroupTable(_freeze(table), names, letters)


def _verify_relations(group: GroupTable, relations: Sequence[Tuple[str, int, int]]) -> None:
    for description, lhs, rhs in relations:
        if lhs != rhs:
            raise NotAGroup(f"presentation relation {description} fails")


def build_dihedral(n: int) -> GroupTable:
    """D_n of order 2n: a^i at index i, a^i b at index n + i."""
    if n < 2:
        raise OrderOutOfRange(2 * n)
    _check_order(2 * n)
    rotations = build_cyclic(n)
    reflect = [(-i) % n for i in range(n)]
    group = semidirect_product(rotations, build_cyclic(2), [list(range(n)), reflect])
    a, b = 1, n
    _verify_relations(group, [
        ("a^n = e", group.power(a, n), 0),
        ("b^2 = e", group.power(b, 2), 0),
        ("bab = a^-1", group.mul(group.mul(b, a), b), group.inv(a)),
    ])
    return group


def build_dicyclic(m: int) -> GroupTable:
    """Dic_m of order 4m: a^(2m) = e, b^2 = a^m, b a b^-1 = a^-1.

    a^i b^s sits at index s*2m + i. Dic_2 is the quaternion group.
    """
    if m < 2:
        raise OrderOutOfRange(4 * m)
    _check_order(4 * m)
    half = 2 * m
    n = 2 * half
    table = np.zeros((n, n), dtype=np.int64)
    for s in range(2):
        for i in range(half):
            for t in range(2):
                for j in range(half):
                    if s == 0:
                        power, top = i + j, t
                    elif t == 0:
                        power, top = i - j, 1
                    else:
                        power, top = i - j + m, 0
                    table[s * half + i, t * half + j] = top * half + power % half
    validate_table(table)
    names = ["e"] + [_power_name("a", i) for i in range(1, half)]
    names += [_concat_names(_power_name("a", i) or "e", "b") for i in range(half)]
    group = GroupTable(_freeze(table), tuple(names), ("a", "b"))
    a, b = 1, half
    _verify_relations(group, [
        ("a^2m = e", group.power(a, half), 0),
        ("b^2 = a^m", group.power(b, 2), group.power(a, m)),
        ("bab^-1 = a^-1", group.mul(group.mul(b, a), group.inv(b)), group.inv(a)),
    ])
    return group


def build_quaternion() -> GroupTable:
    """Q8 as Dic_2; i = a, j = b, -1 = a^2."""
    return build_dicyclic(2)


def build_alternating4() -> GroupTable:
    """A4 as C2^2 x| C3, where c cycles the three involutions."""
    klein = build_elementary_abelian(2, 2)
    cycle = [0, 2, 3, 1]
    cycle_squared = [0, 3, 1, 2]
    return semidirect_product(klein, build_cyclic(3), [list(range(4)), cycle, cycle_squared])


def element_order(g: GroupTable, x: int) -> int:
    rows = g.rows
    current, order = x, 1
    while current != 0:
        current = rows[current][x]
        order += 1
    return order


def generated_subgroup(g: GroupTable, s: Subset) -> Subset:
    """Closure of s and the identity under products (inverses follow in a finite group)."""
    rows = g.rows
    generators = list(s)
    members = 1
    frontier = [0]
    while frontier:
        fresh = []
        for y in frontier:
            for x in generators:
                z = rows[y][x]
                if not members >> z & 1:
                    members |= 1 << z
                    fresh.append(z)
        frontier = fresh
    return Subset(members, g.order)


def is_subgroup(g: GroupTable, h: Subset) -> bool:
    if 0 not in h:
        return False
    rows = g.rows
    members = list(h)
    return all(h.bits >> rows[x][y] & 1 for x in members for y in members)


def right_translate_bits(g: GroupTable, h: Subset, x: int) -> int:
    rows = g.rows
    bits = 0
    for y in h:
        bits |= 1 << rows[y][x]
    return bits


def left_coset_representatives(g: GroupTable, h: Subset, within: Optional[Subset] = None) -> List[int]:
    """Smallest element of every coset Hx, ascending; the cosets partition G.

    With `within` (a subgroup containing h) only the cosets inside it are
    listed.
    """
    if not is_subgroup(g, h):
        raise NotASubgroup(f"{g.format_subset(h)} is not a subgroup of {g.label}")
    ambient = within if within is not None else g.full_subset()
    if within is not None and not (is_subgroup(g, within) and h.issubset(within)):
        raise NotASubgroup(f"{g.format_subset(within)} is not a subgroup containing {g.format_subset(h)}")
    covered = 0
    representatives = []
    for x in ambient:
        if covered >> x & 1:
            continue
        representatives.append(x)
        covered |= right_translate_bits(g, h, x)
    return representatives


def subgroups(g: GroupTable) -> List[Subset]:
    """Every subgroup, as joins of cyclic subgroups; sorted by size then lexicographically."""
    found = {generated_subgroup(g, Subset(1 << x, g.order)).bits for x in range(g.order)}
    frontier = list(found)
    while frontier:
        fresh = []
        for h in frontier:
            for k in list(found):
                if h & k == k or h & k == h:
                    continue
                joined = generated_subgroup(g, Subset(h | k, g.order)).bits
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
        frontier = fresh
    result = [Subset(bits, g.order) for bits in found]
    result.sort(key=lambda s: (len(s), s.lex_key()))
    logger.debug(f"{g.label}: {len(result)} subgroups")
    return result


def restrict(g: GroupTable, h: Subset) -> Tuple[GroupTable, List[int]]:
    """The subgroup h as a group of its own, plus its indices in g (position 0 is e)."""
    if not is_subgroup(g, h):
        raise NotASubgroup(f"{g.format_subset(h)} is not a subgroup of {g.label}")
    members = list(h)
    position = {x: i for i, x in enumerate(members)}
    table = np.array([[position[g.rows[x][y]] for y in members] for x in members], dtype=np.int64)
    names = tuple(g.names[x] for x in members)
    return GroupTable(_freeze(table), names, g.letters), members
