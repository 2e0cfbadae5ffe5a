"""
End-to-end checks of the strong CFS classification and its supporting
lemmas, driven through the library and the management commands.
"""
import json
from io import StringIO
from itertools import combinations

from django.core.management import call_command
from django.test import SimpleTestCase

from classification.lemmas import (
    elementary2_suite,
    elementary3_suite,
    main_witness_suite,
    order2_suite,
    order8_suite,
)
from factoring.engine import is_left_factor
from factoring.tests import naive_is_factor
from groups.catalog import catalog_entries, load
from reports.serializers import load_report
from subsets.algebra import divisors, subsets_containing_identity, translate_left
from subsets.bitsets import Subset
from witnesses.forge import TheoremCase, identity_translates, theorem_case_witness, uncovered_residue

STRONG_CFS_UP_TO_12 = {"C2", "C3", "C4", "C5", "C7", "C11", "C2^2", "C2^3", "C3^2"}


def run_json(*args):
    """Run a command with --json - and return (exit status, document text)."""
    out = StringIO()
    try:
        call_command(*args, "--json", "-", stdout=out)
        code = 0
    except SystemExit as e:
        code = e.code
    return code, out.getvalue()


class ClassificationAcceptanceTest(SimpleTestCase):
    def test_verify_theorem_up_to_twelve(self):
        code, text = run_json("verify_theorem", "--max-order", "12")
        self.assertEqual(code, 0)
        _, report = load_report(json.loads(text))
        self.assertEqual(report.mismatches, ())
        self.assertEqual(set(report.observed_positive), STRONG_CFS_UP_TO_12)
        for cfs in report.reports:
            if cfs.group.expression in report.excluded_trivial:
                continue
            self.assertEqual(cfs.holds, cfs.group.expression in STRONG_CFS_UP_TO_12, cfs.group.expression)

    def test_census_reports_are_byte_identical(self):
        first = run_json("verify_theorem", "--max-order", "12", "--census")
        second = run_json("verify_theorem", "--max-order", "12", "--census")
        self.assertEqual(first, second)


class WitnessAcceptanceTest(SimpleTestCase):
    def test_theorem_case_witnesses(self):
        for case in TheoremCase:
            g, a = theorem_case_witness(case)
            with self.subTest(case=case.value):
                result = is_left_factor(g, a)
                self.assertFalse(result.is_factor)
                self.assertTrue(result.exhausted)

    def test_cyclic_nine_intermediate_facts(self):
        g, a = theorem_case_witness(TheoremCase.C9)
        a5 = g.index_of("a^5")
        translate = next(probe.translate for probe in identity_translates(g, a) if probe.x == a5)
        self.assertEqual(g.format_subset(translate), "{e,a^6,a^7}")
        self.assertTrue(translate.is_disjoint(a))
        self.assertEqual(g.format_subset(uncovered_residue(g, a, [0, a5])), "{a^3,a^5,a^8}")

    def test_main_lemma_over_catalog(self):
        summaries = main_witness_suite()
        for summary in summaries:
            self.assertTrue(summary.ok, f"{summary.scope}: {summary.failures}")
        checked = {summary.scope: summary.checked for summary in summaries}
        for expression in ("C10", "C12", "C2xC6", "D5", "D6", "Dic3", "C16", "C2^4", "C3^3"):
            self.assertGreater(checked[expression], 0, expression)

    def test_order8_lemma(self):
        summaries = order8_suite()
        self.assertTrue(all(summary.ok for summary in summaries))
        checked = {summary.scope: summary.checked for summary in summaries}
        self.assertGreater(checked["Q8"], 0)
        self.assertGreater(checked["C4xC2"], 0)
        self.assertEqual(checked["D4"], 0)
        self.assertEqual(checked["C8"], 0)


class SmallSubsetAcceptanceTest(SimpleTestCase):
    def test_order_two_subsets_both_directions(self):
        summaries = order2_suite(16)
        self.assertIn("C16", [summary.scope for summary in summaries])
        self.assertTrue(all(summary.ok for summary in summaries))

    def test_size_four_and_size_three_subsets(self):
        summaries = elementary2_suite() + elementary3_suite(100, 20250101)
        counts = [(summary.scope.split(" ")[0], summary.checked) for summary in summaries]
        self.assertIn(("C2^3", 35), counts)
        self.assertIn(("C2^4", 455), counts)
        self.assertIn(("C3^2", 28), counts)
        self.assertIn(("C3^3", 100), counts)
        self.assertTrue(all(summary.ok for summary in summaries))


class EngineAcceptanceTest(SimpleTestCase):
    def test_oracle_equivalence_up_to_nine(self):
        for entry in catalog_entries(9):
            g = load(entry.expression)
            for d in divisors(g.order):
                for a in subsets_containing_identity(g.order, d):
                    self.assertEqual(
                        is_left_factor(g, a).is_factor,
                        naive_is_factor(g, a),
                        f"{entry.expression} {g.format_subset(a)}",
                    )

    def test_translation_invariance_up_to_eight(self):
        for entry in catalog_entries(8):
            g = load(entry.expression)
            for d in divisors(g.order):
                for indices in combinations(range(g.order), d):
                    a = Subset.from_indices(g.order, indices)
                    verdict = is_left_factor(g, a).is_factor
                    for u in range(1, g.order):
                        self.assertEqual(is_left_factor(g, translate_left(g, u, a)).is_factor, verdict)

    def test_k_factorizations(self):
        code, _ = run_json("find_factorization", "A4", "2,3,2")
        self.assertEqual(code, 2)
        for expression, sizes in (("C8", "2,2,2"), ("C3^2", "3,3")):
            code, text = run_json("find_factorization", expression, sizes)
            self.assertEqual(code, 0)
            _, result = load_report(json.loads(text))
            self.assertTrue(result.factorization.verify(load(expression)))
