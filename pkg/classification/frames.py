"""
pandas views of classification reports for human output.
"""
from typing import List

import pandas as pd

from groups.catalog import load
from groups.tables import GroupTable

from .cfs import CfsReport, TheoremReport
from .lemmas import LemmaSummary


def census_frame(g: GroupTable, report: CfsReport) -> pd.DataFrame:
    rows = []
    for stats in report.sizes:
        rows.append({
            "size": stats.size,
            "tested": "trivial" if stats.trivial else stats.tested,
            "non-factors": "" if stats.trivial else stats.nonfactors,
            "undecided": "" if stats.trivial else stats.undecided,
            "complete": "" if stats.trivial else stats.complete,
            "examples": " ".join(g.format_subset(example) for example in stats.examples),
        })
    return pd.DataFrame(rows).set_index("size")


def theorem_frame(report: TheoremReport) -> pd.DataFrame:
    rows = []
    expected = set(report.expected_positive)
    for cfs in report.reports:
        expression = cfs.group.expression
        witness = ""
        if cfs.witness is not None:
            witness = load(expression).format_subset(cfs.witness)
        rows.append({
            "group": expression,
            "order": cfs.group.order,
            "verdict": "trivial" if expression in report.excluded_trivial else cfs.verdict,
            "expected": "" if expression in report.excluded_trivial else ("holds" if expression in expected else "fails"),
            "witness": witness,
            "nodes": cfs.nodes_explored,
        })
    return pd.DataFrame(rows).set_index("group")


def lemma_frame(summaries: List[LemmaSummary]) -> pd.DataFrame:
    return pd.DataFrame([
        {
            "lemma": summary.lemma,
            "scope": summary.scope,
            "checked": summary.checked,
            "passed": summary.passed,
            "result": "pass" if summary.ok else "FAIL",
        }
        for summary in summaries
    ])
