import json
from io import StringIO
from itertools import combinations

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from factorlab.exceptions import EmptySubset, NotLagrange, SizeMismatch
from groups.catalog import CATALOG, catalog_entries, load
from groups.tables import left_coset_representatives, subgroups
from reports.serializers import load_report
from subsets.algebra import divisors, product_check, subsets_containing_identity, translate_left, translate_right
from subsets.bitsets import Subset
from subsets.notation import parse_subset

from .engine import (
    Reason,
    Side,
    find_all_complements,
    find_factorization,
    is_left_factor,
    is_right_factor,
)


def naive_is_factor(g, a):
    """Try every identity-containing B of the right size; the reference oracle."""
    if g.order % len(a):
        return False
    size = g.order // len(a)
    for rest in combinations(range(1, g.order), size - 1):
        b = Subset.from_indices(g.order, (0,) + rest)
        if product_check(g, a, b).is_factorization:
            return True
    return False


class LeftFactorTest(SimpleTestCase):
    def test_complement_for_two_element_subset(self):
        c4 = load("C4")
        result = is_left_factor(c4, parse_subset(c4, "{e,a}"))
        self.assertTrue(result.is_factor)
        self.assertEqual(c4.format_subset(result.complement), "{e,a^2}")
        self.assertEqual(result.reason, Reason.COMPLEMENT_FOUND)
        self.assertEqual(result.verdict, "factor")
        self.assertGreater(result.nodes_explored, 0)

    def test_whole_group(self):
        for expression in ("C1", "S3", "A4"):
            g = load(expression)
            result = is_left_factor(g, g.full_subset())
            self.assertEqual(result.complement.indices, (0,))

    def test_size_not_dividing(self):
        c6 = load("C6")
        result = is_left_factor(c6, parse_subset(c6, "{e,a,a^2,a^3}"))
        self.assertFalse(result.is_factor)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.reason, Reason.SIZE_NOT_DIVIDING)
        self.assertEqual(result.nodes_explored, 0)

    def test_empty_subset(self):
        with self.assertRaises(EmptySubset):
            is_left_factor(load("C4"), Subset.empty(4))

    def test_cyclic_nine_witness(self):
        c9 = load("C9")
        result = is_left_factor(c9, parse_subset(c9, "{a,a^2,a^4}"))
        self.assertFalse(result.is_factor)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.verdict, "not-factor")

    def test_node_budget_gives_unknown(self):
        c8 = load("C8")
        result = is_left_factor(c8, parse_subset(c8, "{a,a^2,a^3,a^5}"), node_budget=1)
        self.assertFalse(result.is_factor)
        self.assertFalse(result.exhausted)
        self.assertEqual(result.reason, Reason.NODE_BUDGET)
        self.assertEqual(result.verdict, "unknown")

    def test_subgroup_is_factor(self):
        c6 = load("C6")
        result = is_left_factor(c6, parse_subset(c6, "{e,a,a^2}"))
        self.assertTrue(result.is_factor)
        self.assertTrue(product_check(c6, parse_subset(c6, "{e,a,a^2}"), result.complement).is_factorization)

    def test_every_subgroup_is_factor_with_coset_representatives(self):
        for entry in CATALOG:
            g = load(entry.expression)
            with self.subTest(group=entry.expression):
                for h in subgroups(g):
                    representatives = Subset.from_indices(g.order, left_coset_representatives(g, h))
                    self.assertTrue(product_check(g, h, representatives).is_factorization, g.format_subset(h))
                    self.assertTrue(is_left_factor(g, h).is_factor)


class RightFactorTest(SimpleTestCase):
    def test_right_complement_certificate(self):
        s3 = load("S3")
        a = parse_subset(s3, "{e,b}")
        result = is_right_factor(s3, a)
        self.assertTrue(result.is_factor)
        self.assertEqual(result.side, Side.RIGHT)
        self.assertTrue(product_check(s3, result.complement, a).is_factorization)

    def test_inverse_duality(self):
        for expression in ("S3", "D4", "Q8"):
            g = load(expression)
            for rest in combinations(range(1, g.order), 1):
                a = Subset.from_indices(g.order, (0,) + rest)
                inverse = Subset.from_indices(g.order, (g.inv(x) for x in a))
                self.assertEqual(is_left_factor(g, a).is_factor, is_right_factor(g, inverse).is_factor)

    def test_sides_agree_in_abelian_group(self):
        c6 = load("C6")
        for d in divisors(6):
            for indices in combinations(range(6), d):
                a = Subset.from_indices(6, indices)
                with self.subTest(subset=c6.format_subset(a)):
                    self.assertEqual(is_left_factor(c6, a).is_factor, is_right_factor(c6, a).is_factor)


class ComplementEnumerationTest(SimpleTestCase):
    def test_single_class(self):
        c4 = load("C4")
        complements = find_all_complements(c4, parse_subset(c4, "{e,a}"))
        self.assertEqual([c4.format_subset(b) for b in complements], ["{e,a^2}"])

    def test_klein_group_has_two_classes(self):
        g = load("C2^2")
        complements = find_all_complements(g, parse_subset(g, "{e,a}"))
        self.assertEqual([g.format_subset(b) for b in complements], ["{e,b}", "{e,ab}"])

    def test_non_factor_has_none(self):
        c9 = load("C9")
        self.assertEqual(find_all_complements(c9, parse_subset(c9, "{a,a^2,a^4}")), [])

    def test_right_side_representatives_contain_identity(self):
        d4 = load("D4")
        a = parse_subset(d4, "{e,b}")
        complements = find_all_complements(d4, a, Side.RIGHT)
        self.assertTrue(complements)
        for b in complements:
            self.assertIn(0, b)
            self.assertTrue(product_check(d4, b, a).is_factorization)

    def test_not_lagrange(self):
        c4 = load("C4")
        with self.assertRaises(NotLagrange):
            find_all_complements(c4, parse_subset(c4, "{e,a,a^2}"))


class FactorizationSearchTest(SimpleTestCase):
    def test_single_part(self):
        c4 = load("C4")
        result = find_factorization(c4, [4])
        self.assertEqual(result.factorization.parts, (c4.full_subset(),))
        self.assertEqual(result.verdict, "exists")

    def test_alternating_group_has_no_two_three_two(self):
        result = find_factorization(load("A4"), [2, 3, 2])
        self.assertIsNone(result.factorization)
        self.assertTrue(result.exhausted)
        self.assertEqual(result.verdict, "none")

    def test_factorizations_found_and_verified(self):
        for expression, sizes in (("C8", [2, 2, 2]), ("C3^2", [3, 3]), ("C2^3", [2, 2, 2]), ("A4", [3, 4])):
            g = load(expression)
            with self.subTest(group=expression):
                result = find_factorization(g, sizes)
                self.assertTrue(result.factorization.verify(g))
                self.assertEqual(result.factorization.sizes, sizes)
                self.assertTrue(all(0 in part for part in result.factorization.parts))

    def test_size_mismatch(self):
        c4 = load("C4")
        for sizes in ([2, 3], [], [0, 4]):
            with self.subTest(sizes=sizes), self.assertRaises(SizeMismatch):
                find_factorization(c4, sizes)

    def test_two_part_search_matches_left_factor_existence(self):
        for entry in catalog_entries(8):
            g = load(entry.expression)
            for m in divisors(g.order):
                expected = any(is_left_factor(g, a).is_factor for a in subsets_containing_identity(g.order, m))
                with self.subTest(group=entry.expression, m=m):
                    result = find_factorization(g, [m, g.order // m])
                    self.assertEqual(result.verdict, "exists" if expected else "none")


class OracleEquivalenceTest(SimpleTestCase):
    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_engine_matches_naive_oracle(self, data):
        g = load(data.draw(st.sampled_from(["C6", "S3", "C8", "D4", "Q8", "C4xC2", "C9", "C3^2", "D5", "A4"])))
        indices = data.draw(st.sets(st.integers(0, g.order - 1), min_size=1, max_size=g.order))
        a = Subset.from_indices(g.order, indices)
        self.assertEqual(is_left_factor(g, a).is_factor, naive_is_factor(g, a))

    @settings(max_examples=300, deadline=None)
    @given(st.data())
    def test_left_translation_invariance(self, data):
        g = load(data.draw(st.sampled_from(["S3", "D4", "Q8", "C4xC2", "A4"])))
        indices = data.draw(st.sets(st.integers(0, g.order - 1), min_size=1, max_size=g.order))
        a = Subset.from_indices(g.order, indices)
        u = data.draw(st.integers(0, g.order - 1))
        self.assertEqual(is_left_factor(g, a).is_factor, is_left_factor(g, translate_left(g, u, a)).is_factor)

    def test_right_translation_invariance(self):
        for entry in catalog_entries(8):
            g = load(entry.expression)
            with self.subTest(group=entry.expression):
                for d in divisors(g.order):
                    for a in subsets_containing_identity(g.order, d):
                        verdict = is_left_factor(g, a).is_factor
                        for v in range(1, g.order):
                            self.assertEqual(is_left_factor(g, translate_right(g, a, v)).is_factor, verdict)


class FactoringCommandsTest(SimpleTestCase):
    def test_not_a_factor_exits_two(self):
        with self.assertRaises(SystemExit) as ctx:
            call_command("is_factor", "C9", "{a,a^2,a^4}", stdout=StringIO())
        self.assertEqual(ctx.exception.code, 2)

    def test_factor_reports_complement(self):
        out = StringIO()
        call_command("is_factor", "C4", "{e,a}", stdout=out)
        self.assertIn("complement: {e,a^2}", out.getvalue())

    def test_non_subgroup_factor(self):
        out = StringIO()
        call_command("is_factor", "C6", "{e,a,a^2}", stdout=out)
        self.assertIn("is a left factor of C6", out.getvalue())

    def test_input_errors(self):
        with self.assertRaises(CommandError):
            call_command("is_factor", "C4", "{a^9}", stdout=StringIO())
        with self.assertRaises(CommandError):
            call_command("is_factor", "K4", "{e}", stdout=StringIO())
        with self.assertRaises(CommandError):
            call_command("find_factorization", "C4", "2,x", stdout=StringIO())

    def test_node_budget_exits_three(self):
        with self.assertRaises(SystemExit) as ctx:
            call_command("is_factor", "C8", "{a,a^2,a^3,a^5}", "--node-budget", "1", stdout=StringIO())
        self.assertEqual(ctx.exception.code, 3)

    def test_json_report_round_trips(self):
        out = StringIO()
        call_command("is_factor", "D4", "{e,b}", "--side", "right", "--json", "-", stdout=out)
        document = json.loads(out.getvalue())
        self.assertEqual(document["command"], "is_factor")
        self.assertEqual(document["verdict"], "factor")
        self.assertEqual(document["inputs"]["side"], "right")
        _, result = load_report(document)
        self.assertEqual(result, is_right_factor(load("D4"), parse_subset(load("D4"), "{e,b}")))

    def test_find_factorization_command(self):
        with self.assertRaises(SystemExit) as ctx:
            call_command("find_factorization", "A4", "2,3,2", stdout=StringIO())
        self.assertEqual(ctx.exception.code, 2)
        out = StringIO()
        call_command("find_factorization", "C2^3", "2,2,2", "--json", "-", stdout=out)
        _, result = load_report(json.loads(out.getvalue()))
        self.assertTrue(result.factorization.verify(load("C2^3")))

    def test_find_complements_command(self):
        out = StringIO()
        call_command("find_complements", "C2^2", "{e,a}", stdout=out)
        self.assertIn("2 left complement class(es)", out.getvalue())
