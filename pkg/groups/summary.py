"""
Group summaries for `group_info` and `from_table`.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Tuple

import pandas as pd

from .specs import GroupSpec
from .tables import GroupTable, element_order, subgroups


@dataclass(frozen=True)
class ElementInfo:
    index: int
    name: str
    order: int
    inverse: str


@dataclass(frozen=True)
class GroupSummary:
    group: GroupSpec
    abelian: bool
    elements: Tuple[ElementInfo, ...]
    subgroup_orders: Tuple[int, ...]

    @property
    def order_counts(self) -> dict:
        return dict(sorted(Counter(element.order for element in self.elements).items()))


def describe_group(g: GroupTable) -> GroupSummary:
    spec = g.spec if g.spec is not None else GroupSpec(g.label, g.order)
    elements = tuple(
        ElementInfo(x, g.name(x), element_order(g, x), g.name(g.inv(x))) for x in range(g.order)
    )
    return GroupSummary(
        group=spec,
        abelian=g.is_abelian,
        elements=elements,
        subgroup_orders=tuple(len(h) for h in subgroups(g)),
    )


def cayley_frame(g: GroupTable) -> pd.DataFrame:
    """The multiplication table with element names as labels."""
    names = list(g.names)
    return pd.DataFrame(
        [[names[v] for v in row] for row in g.rows], index=names, columns=names,
    )


def element_frame(summary: GroupSummary) -> pd.DataFrame:
    return pd.DataFrame(
        [(e.index, e.name, e.order, e.inverse) for e in summary.elements],
        columns=["index", "name", "order", "inverse"],
    ).set_index("index")
