"""
Exhaustive lemma suites.

Each suite runs a constructive recipe or a witness family over the catalog
and confirms the outcome with the factoring engine. A suite never trusts
its own construction: complements are re-checked with product_check and
non-factor witnesses must be refused by an exhausted search.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np

from constructions.recipes import (
    complement_for_3subset_elem3,
    complement_for_4subset_elem2,
    complement_for_order2_subset,
    lift_complement,
)
from factoring.engine import is_left_factor
from factorlab.exceptions import FactorLabError, OddOrder
from groups.catalog import catalog_entries, load
from groups.tables import GroupTable, element_order, restrict, subgroups
from subsets.algebra import divisors, product_check, subsets_containing_identity
from subsets.bitsets import Subset
from witnesses.forge import (
    TheoremCase,
    build_main_witness,
    build_order8_witness,
    enumerate_main_witness_params,
    identity_translates,
    order8_witness_pairs,
    theorem_case_witness,
    translates_equal_to,
    uncovered_residue,
)

logger = logging.getLogger(__name__)

MAX_FAILURES_REPORTED = 10


@dataclass(frozen=True)
class LemmaSummary:
    lemma: str
    scope: str
    checked: int
    passed: int
    failures: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.checked == self.passed


class _Tally:
    def __init__(self, lemma: str, scope: str):
        self.lemma = lemma
        self.scope = scope
        self.checked = 0
        self.passed = 0
        self.failures: List[str] = []

    def record(self, success: bool, description: str = ""):
        self.checked += 1
        if success:
            self.passed += 1
        elif len(self.failures) < MAX_FAILURES_REPORTED:
            self.failures.append(description)

    def summary(self) -> LemmaSummary:
        if self.failures:
            logger.warning(f"{self.lemma} on {self.scope}: {self.checked - self.passed} failures")
        return LemmaSummary(self.lemma, self.scope, self.checked, self.passed, tuple(self.failures))


def _is_complement(g: GroupTable, a: Subset, b: Subset) -> bool:
    return product_check(g, a, b).is_factorization


def _refused(g: GroupTable, a: Subset) -> bool:
    result = is_left_factor(g, a)
    return not result.is_factor and result.exhausted


def subgroup_lifting_suite(max_order: int) -> List[LemmaSummary]:
    """Factors of a subgroup H lift to factors of G through coset representatives."""
    summaries = []
    for entry in catalog_entries(max_order):
        g = load(entry.expression)
        tally = _Tally("subgroup-lifting", entry.expression)
        for h in subgroups(g):
            if len(h) in (1, g.order):
                continue
            sub, members = restrict(g, h)
            for d in divisors(sub.order)[1:-1]:
                for local in subsets_containing_identity(sub.order, d):
                    found = is_left_factor(sub, local)
                    if not found.is_factor:
                        continue
                    a = Subset.from_indices(g.order, (members[x] for x in local))
                    b_prime = Subset.from_indices(g.order, (members[x] for x in found.complement))
                    b = lift_complement(g, h, a, b_prime)
                    tally.record(
                        _is_complement(g, a, b) and len(b) == len(b_prime) * g.order // len(h),
                        f"{g.format_subset(a)} in {g.format_subset(h)}",
                    )
        summaries.append(tally.summary())
    return summaries


def order2_suite(max_order: int) -> List[LemmaSummary]:
    """{e, x} is a factor exactly when x has even order."""
    summaries = []
    for entry in catalog_entries(max_order):
        if entry.order % 2:
            continue
        g = load(entry.expression)
        tally = _Tally("small-subset-order2", entry.expression)
        for x in range(1, g.order):
            a = Subset.from_indices(g.order, (0, x))
            even = element_order(g, x) % 2 == 0
            engine = is_left_factor(g, a)
            if even:
                b = complement_for_order2_subset(g, x)
                success = engine.is_factor and _is_complement(g, a, b)
            else:
                try:
                    complement_for_order2_subset(g, x)
                    success = False
                except OddOrder:
                    success = not engine.is_factor and engine.exhausted
            tally.record(success, g.format_subset(a))
        summaries.append(tally.summary())
    return summaries


def _recipe_suite(
    lemma: str,
    expression: str,
    size: int,
    recipe: Callable[[GroupTable, Subset], Subset],
    subsets: Optional[Iterable[Subset]] = None,
    scope: Optional[str] = None,
) -> LemmaSummary:
    g = load(expression)
    tally = _Tally(lemma, scope or expression)
    for a in subsets if subsets is not None else subsets_containing_identity(g.order, size):
        try:
            b = recipe(g, a)
        except FactorLabError as e:
            tally.record(False, f"{g.format_subset(a)}: {e}")
            continue
        tally.record(_is_complement(g, a, b) and is_left_factor(g, a).is_factor, g.format_subset(a))
    return tally.summary()


def sampled_subsets(order: int, size: int, sample_size: int, seed: int) -> List[Subset]:
    """A seeded sample of identity-containing subsets, in lexicographic order."""
    population = list(subsets_containing_identity(order, size))
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(population), size=min(sample_size, len(population)), replace=False)
    return [population[i] for i in sorted(picks.tolist())]


def elementary2_suite() -> List[LemmaSummary]:
    return [
        _recipe_suite("small-subset-size4", expression, 4, complement_for_4subset_elem2)
        for expression in ("C2^2", "C2^3", "C2^4")
    ]


def elementary3_suite(sample_size: int, seed: int) -> List[LemmaSummary]:
    summaries = [
        _recipe_suite("small-subset-size3", expression, 3, complement_for_3subset_elem3)
        for expression in ("C3", "C3^2")
    ]
    sample = sampled_subsets(27, 3, sample_size, seed)
    summaries.append(_recipe_suite(
        "small-subset-size3", "C3^3", 3, complement_for_3subset_elem3,
        subsets=sample, scope=f"C3^3 (sample of {len(sample)}, seed {seed})",
    ))
    return summaries


def main_witness_suite(max_order: Optional[int] = None) -> List[LemmaSummary]:
    """Every enumerated main witness is refused; runs over the whole catalog by default."""
    summaries = []
    for entry in catalog_entries(max_order):
        g = load(entry.expression)
        tally = _Tally("main-witness", entry.expression)
        for params in enumerate_main_witness_params(g):
            a = build_main_witness(g, params)
            tally.record(_refused(g, a), g.format_subset(a))
        summaries.append(tally.summary())
    return summaries


def order8_suite() -> List[LemmaSummary]:
    summaries = []
    for entry in catalog_entries(8):
        if entry.order != 8:
            continue
        g = load(entry.expression)
        tally = _Tally("order8-witness", entry.expression)
        for a, b in order8_witness_pairs(g):
            witness = build_order8_witness(g, a, b)
            tally.record(_refused(g, witness), g.format_subset(witness))
        summaries.append(tally.summary())
    return summaries


def theorem_cases_suite() -> List[LemmaSummary]:
    summaries = []
    for case in TheoremCase:
        g, a = theorem_case_witness(case)
        tally = _Tally("theorem-case", case.value)
        tally.record(g.order % len(a) == 0, "witness is a Lagrange subset")
        tally.record(_refused(g, a), f"{g.format_subset(a)} refused by an exhausted search")
        if case is TheoremCase.D4:
            probes = identity_translates(g, a)
            tally.record(all(probe.meets for probe in probes), "every translate through e meets A")
        if case is TheoremCase.C9:
            a5 = g.power(1, 5)
            disjoint = [probe.x for probe in identity_translates(g, a) if not probe.meets]
            residue = uncovered_residue(g, a, [0, a5])
            tally.record(disjoint == [a5], "only A a^5 avoids A")
            tally.record(g.format_subset(residue) == "{a^3,a^5,a^8}", "residue is {a^3,a^5,a^8}")
            tally.record(not translates_equal_to(g, a, residue), "no translate of A fills the residue")
        summaries.append(tally.summary())
    return summaries


LEMMA_SUITES = ("subgroup-lifting", "small-subset", "main-witness", "order8-witness", "theorem-case")


def verify_lemmas(
    max_order: int = 16,
    *,
    sample_size: int = 100,
    seed: int = 20250101,
    only: Optional[Iterable[str]] = None,
) -> List[LemmaSummary]:
    selected = set(only or LEMMA_SUITES)
    runners: Dict[str, Callable[[], List[LemmaSummary]]] = {
        "subgroup-lifting": lambda: subgroup_lifting_suite(min(max_order, 12)),
        "small-subset": lambda: order2_suite(max_order) + elementary2_suite() + elementary3_suite(sample_size, seed),
        "main-witness": main_witness_suite,
        "order8-witness": order8_suite,
        "theorem-case": theorem_cases_suite,
    }
    summaries = []
    for name in LEMMA_SUITES:
        if name in selected:
            logger.info(f"Running lemma suite {name}")
            summaries.extend(runners[name]())
    return summaries
