"""
Strong CFS decisions: is every Lagrange subset of G a left factor?

Sizes are scanned in increasing order and, within a size, identity-containing
subsets in lexicographic order, so the first witness is reproducible. Sizes
1 and |G| are always factors and are recorded as trivial without a scan.
"""
import heapq
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from factorlab.exceptions import CatalogBoundExceeded, NotLagrange
from factoring.engine import FactorResult, is_left_factor
from groups.catalog import CatalogEntry, catalog_entries, expected_strong_cfs, load
from groups.specs import GroupSpec
from groups.tables import GroupTable
from subsets.algebra import divisors, enumerate_lagrange_subsets
from subsets.bitsets import Subset

from .symmetry import OrbitPruner

logger = logging.getLogger(__name__)

DEFAULT_CATALOG_BOUND = 16
DEFAULT_CENSUS_EXAMPLES = 5


@dataclass(frozen=True)
class SizeStats:
    size: int
    tested: int
    nonfactors: int
    undecided: int
    examples: Tuple[Subset, ...]
    trivial: bool = False
    complete: bool = True


@dataclass(frozen=True)
class CfsReport:
    group: GroupSpec
    holds: bool
    witness: Optional[Subset]
    witness_result: Optional[FactorResult]
    sizes: Tuple[SizeStats, ...]
    census: bool
    pruned: bool
    nodes_explored: int

    @property
    def verdict(self) -> str:
        if self.holds:
            return "holds"
        return "fails" if self.witness is not None else "unknown"

    @property
    def trivial(self) -> bool:
        return self.group.order == 1


@dataclass(frozen=True)
class TheoremReport:
    max_order: int
    reports: Tuple[CfsReport, ...]
    expected_positive: Tuple[str, ...]
    observed_positive: Tuple[str, ...]
    excluded_trivial: Tuple[str, ...]
    mismatches: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


@dataclass
class _Scan:
    stats: SizeStats
    witness: Optional[Tuple[Subset, FactorResult]]
    nodes: int


def _spec_of(g: GroupTable) -> GroupSpec:
    return g.spec if g.spec is not None else GroupSpec(g.label, g.order)


def _scan_size(
    g: GroupTable,
    d: int,
    *,
    stop_at_first: bool,
    prune: bool,
    node_budget: Optional[int],
    examples_limit: int,
) -> _Scan:
    pruner = OrbitPruner(g) if prune else None
    tested = nonfactors = undecided = nodes = 0
    witness = None
    failing: List[Subset] = []
    complete = True

    for a in enumerate_lagrange_subsets(g, d):
        if pruner is None:
            members = [a]
        else:
            members = pruner.visit(a)
            if members is None:
                continue
        result = is_left_factor(g, a, node_budget)
        nodes += result.nodes_explored
        tested += len(members)
        if result.is_factor:
            continue
        if not result.exhausted:
            undecided += len(members)
            continue
        nonfactors += len(members)
        failing.extend(members)
        if witness is None:
            witness = (a, result)
        if stop_at_first:
            complete = False
            break

    examples = tuple(heapq.nsmallest(examples_limit, failing, key=Subset.lex_key))
    stats = SizeStats(d, tested, nonfactors, undecided, examples, complete=complete)
    return _Scan(stats, witness, nodes)


def nonfactor_census(
    g: GroupTable,
    d: int,
    *,
    examples_limit: int = DEFAULT_CENSUS_EXAMPLES,
    prune: bool = False,
    node_budget: Optional[int] = None,
) -> SizeStats:
    """Exact counts over the identity-containing subsets of size d."""
    if d < 1 or g.order % d:
        raise NotLagrange(d, g.order)
    return _scan_size(
        g, d, stop_at_first=False, prune=prune, node_budget=node_budget, examples_limit=examples_limit,
    ).stats


def check_strong_cfs(
    g: GroupTable,
    census: bool = False,
    *,
    prune: bool = False,
    node_budget: Optional[int] = None,
    examples_limit: int = DEFAULT_CENSUS_EXAMPLES,
) -> CfsReport:
    sizes = []
    witness = None
    nodes = 0
    undecided = 0

    for d in divisors(g.order):
        if d in (1, g.order):
            sizes.append(SizeStats(d, 0, 0, 0, (), trivial=True))
            continue
        if witness is not None and not census:
            break
        scan = _scan_size(
            g, d, stop_at_first=not census, prune=prune, node_budget=node_budget, examples_limit=examples_limit,
        )
        sizes.append(scan.stats)
        nodes += scan.nodes
        undecided += scan.stats.undecided
        if witness is None and scan.witness is not None:
            witness = scan.witness

    holds = witness is None and undecided == 0
    report = CfsReport(
        group=_spec_of(g),
        holds=holds,
        witness=witness[0] if witness else None,
        witness_result=witness[1] if witness else None,
        sizes=tuple(sizes),
        census=census,
        pruned=prune,
        nodes_explored=nodes,
    )
    if witness is not None:
        logger.info(f"{g.label}: strong CFS fails, witness {g.format_subset(witness[0])}")
    elif undecided:
        logger.warning(f"{g.label}: {undecided} subsets left undecided by the node budget")
    else:
        logger.info(f"{g.label}: strong CFS holds ({nodes} nodes)")
    return report


def check_entries_sequentially(entries: Sequence[CatalogEntry], **options) -> List[CfsReport]:
    return [check_strong_cfs(load(entry.expression), **options) for entry in entries]


def verify_theorem(
    max_order: int,
    *,
    census: bool = False,
    prune: bool = False,
    node_budget: Optional[int] = None,
    bound: int = DEFAULT_CATALOG_BOUND,
    examples_limit: int = DEFAULT_CENSUS_EXAMPLES,
    runner: Callable[..., List[CfsReport]] = check_entries_sequentially,
) -> TheoremReport:
    """Classify every catalog group of order <= max_order and compare with the theorem."""
    if max_order > bound:
        raise CatalogBoundExceeded(max_order, bound)

    entries = catalog_entries(max_order)
    reports = runner(
        entries, census=census, prune=prune, node_budget=node_budget, examples_limit=examples_limit,
    )

    expected, observed, trivial, mismatches = [], [], [], []
    for entry, report in zip(entries, reports):
        if entry.order == 1:
            trivial.append(entry.expression)
            continue
        predicted = expected_strong_cfs(entry.expression)
        if predicted:
            expected.append(entry.expression)
        if report.holds:
            observed.append(entry.expression)
        if report.verdict == "unknown" or report.holds != predicted:
            logger.warning(f"{entry.expression}: predicted {predicted}, observed {report.verdict}")
            mismatches.append(entry.expression)

    logger.info(f"Theorem check up to order {max_order}: {len(reports)} groups, {len(mismatches)} mismatches")
    return TheoremReport(
        max_order=max_order,
        reports=tuple(reports),
        expected_positive=tuple(expected),
        observed_positive=tuple(observed),
        excluded_trivial=tuple(trivial),
        mismatches=tuple(mismatches),
    )
