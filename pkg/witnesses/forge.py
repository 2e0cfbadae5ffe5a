"""
Explicit non-factor witnesses and the translate probes used to inspect them.

Nothing here decides factor status; the factoring engine confirms every
witness.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Sequence, Tuple

from factorlab.exceptions import BadParams
from groups.catalog import load
from groups.tables import GroupTable, element_order, generated_subgroup, is_subgroup, subgroups
from subsets.algebra import translate_right
from subsets.bitsets import Subset
from subsets.notation import parse_subset

logger = logging.getLogger(__name__)

MIN_MAIN_SUBGROUP = 5


@dataclass(frozen=True)
class MainWitnessParams:
    h: Subset
    h0: int
    h1: int
    g_elt: int


@dataclass(frozen=True)
class TranslateProbe:
    x: int
    translate: Subset
    meets: bool


class TheoremCase(str, Enum):
    D4 = "D4"
    C8 = "C8"
    C9 = "C9"


THEOREM_CASE_SETS = {
    TheoremCase.D4: "{a,a^2,b,a^2b}",
    TheoremCase.C8: "{a,a^2,a^3,a^5}",
    TheoremCase.C9: "{a,a^2,a^4}",
}


def _validate_main_params(g: GroupTable, p: MainWitnessParams) -> None:
    h = p.h
    if not is_subgroup(g, h):
        raise BadParams("h must be a subgroup")
    if len(h) < MIN_MAIN_SUBGROUP:
        raise BadParams(f"|h| >= {MIN_MAIN_SUBGROUP}")
    if len(h) == g.order:
        raise BadParams("h must be a proper subgroup")
    if p.h0 not in h or p.h0 == 0:
        raise BadParams("h0 in h and h0 != e")
    if p.h1 not in h or p.h1 in (0, p.h0, g.inv(p.h0)):
        raise BadParams("h1 in h and h1 not in {e, h0, h0^-1}")
    if p.g_elt in h:
        raise BadParams("g not in h")


def build_main_witness(g: GroupTable, p: MainWitnessParams) -> Subset:
    """A = (H minus {e, h0}) together with g and h1*g."""
    _validate_main_params(g, p)
    core = p.h.without_element(0).without_element(p.h0)
    witness = core.with_element(p.g_elt).with_element(g.mul(p.h1, p.g_elt))
    assert len(witness) == len(p.h)
    return witness


def enumerate_main_witness_params(g: GroupTable) -> Iterator[MainWitnessParams]:
    for h in subgroups(g):
        if len(h) < MIN_MAIN_SUBGROUP or len(h) == g.order:
            continue
        outside = [x for x in range(g.order) if x not in h]
        for h0 in h:
            if h0 == 0:
                continue
            excluded = (0, h0, g.inv(h0))
            for h1 in h:
                if h1 in excluded:
                    continue
                for g_elt in outside:
                    yield MainWitnessParams(h, h0, h1, g_elt)


def _check_order8_pair(g: GroupTable, a: int, b: int) -> None:
    if g.order != 8:
        raise BadParams("|G| = 8")
    if element_order(g, a) != 4 or element_order(g, b) != 4:
        raise BadParams("a and b must have order 4")
    cyclic_a = generated_subgroup(g, Subset.from_indices(g.order, (a,)))
    cyclic_b = generated_subgroup(g, Subset.from_indices(g.order, (b,)))
    if cyclic_a == cyclic_b:
        raise BadParams("<a> != <b>")


def build_order8_witness(g: GroupTable, a: int, b: int) -> Subset:
    """{a, a^2, a^3, b} for order-4 elements generating different subgroups."""
    _check_order8_pair(g, a, b)
    return Subset.from_indices(g.order, (a, g.power(a, 2), g.power(a, 3), b))


def order8_witness_pairs(g: GroupTable) -> List[Tuple[int, int]]:
    """Every ordered pair accepted by build_order8_witness; empty unless |G| = 8."""
    if g.order != 8:
        return []
    fours = [x for x in range(g.order) if element_order(g, x) == 4]
    cyclic = {x: generated_subgroup(g, Subset.from_indices(g.order, (x,))) for x in fours}
    return [(a, b) for a in fours for b in fours if cyclic[a] != cyclic[b]]


def theorem_case_witness(case: TheoremCase) -> Tuple[GroupTable, Subset]:
    case = TheoremCase(case)
    g = load(case.value)
    return g, parse_subset(g, THEOREM_CASE_SETS[case])


def identity_translates(g: GroupTable, a: Subset) -> List[TranslateProbe]:
    """Every right translate Ax that contains e, i.e. x in A^-1, ascending in x."""
    xs = sorted({g.inv(y) for y in a})
    probes = []
    for x in xs:
        translate = translate_right(g, a, x)
        probes.append(TranslateProbe(x, translate, not translate.is_disjoint(a)))
    return probes


def uncovered_residue(g: GroupTable, a: Subset, xs: Sequence[int]) -> Subset:
    """G minus the union of the translates Ax for x in xs."""
    covered = Subset.empty(g.order)
    for x in xs:
        covered = covered | translate_right(g, a, x)
    return g.full_subset() - covered


def translates_equal_to(g: GroupTable, a: Subset, target: Subset) -> List[int]:
    return [x for x in range(g.order) if translate_right(g, a, x) == target]
