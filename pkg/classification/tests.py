import json
from io import StringIO
from math import comb

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from factorlab import celery_app
from factorlab.exceptions import CatalogBoundExceeded, NotLagrange
from groups.catalog import catalog_entries, load
from reports.serializers import CfsReportSerializer, load_report
from subsets.algebra import normalize_to_identity
from subsets.bitsets import Subset
from subsets.notation import parse_subset
from witnesses.forge import build_main_witness, enumerate_main_witness_params

from .cfs import check_strong_cfs, nonfactor_census, verify_theorem
from .frames import census_frame, lemma_frame, theorem_frame
from .lemmas import (
    elementary2_suite,
    elementary3_suite,
    main_witness_suite,
    order2_suite,
    order8_suite,
    sampled_subsets,
    subgroup_lifting_suite,
    theorem_cases_suite,
    verify_lemmas,
)
from .symmetry import OrbitPruner
from .tasks import check_entries_distributed, check_group_strong_cfs, verify_theorem_regression

POSITIVE_UP_TO_12 = ("C2", "C3", "C4", "C2^2", "C5", "C7", "C2^3", "C3^2", "C11")


class StrongCfsTest(SimpleTestCase):
    def test_prime_cyclic_holds_trivially(self):
        report = check_strong_cfs(load("C5"))
        self.assertTrue(report.holds)
        self.assertIsNone(report.witness)
        self.assertEqual([s.size for s in report.sizes], [1, 5])
        self.assertTrue(all(s.trivial for s in report.sizes))
        self.assertEqual(report.nodes_explored, 0)

    def test_trivial_group(self):
        report = check_strong_cfs(load("C1"))
        self.assertTrue(report.holds)
        self.assertTrue(report.trivial)
        self.assertEqual(report.verdict, "holds")

    def test_elementary_abelian_two_groups(self):
        for expression in ("C2", "C2^2", "C2^3"):
            with self.subTest(group=expression):
                self.assertTrue(check_strong_cfs(load(expression)).holds)

    def test_elementary_abelian_order_16_fails(self):
        g = load("C2^4")
        report = check_strong_cfs(g, prune=True)
        self.assertEqual(report.verdict, "fails")
        # Every subset of size 2 or 4 is a factor here, so the witness has size 8.
        self.assertEqual(len(report.witness), 8)

    def test_first_witness_for_cyclic_six(self):
        c6 = load("C6")
        report = check_strong_cfs(c6)
        self.assertFalse(report.holds)
        self.assertEqual(c6.format_subset(report.witness), "{e,a^2}")
        self.assertTrue(report.witness_result.exhausted)
        self.assertEqual(report.verdict, "fails")
        self.assertEqual([s.size for s in report.sizes], [1, 2])
        self.assertFalse(report.sizes[1].complete)

    def test_theorem_groups_fail(self):
        for expression in ("C6", "S3", "C8", "D4", "Q8", "C4xC2", "C9", "A4"):
            with self.subTest(group=expression):
                report = check_strong_cfs(load(expression))
                self.assertFalse(report.holds)
                self.assertIsNotNone(report.witness)

    def test_node_budget_gives_unknown(self):
        report = check_strong_cfs(load("C8"), node_budget=1)
        self.assertFalse(report.holds)
        self.assertIsNone(report.witness)
        self.assertEqual(report.verdict, "unknown")

    def test_deterministic(self):
        first = CfsReportSerializer(check_strong_cfs(load("D4"), census=True)).data
        second = CfsReportSerializer(check_strong_cfs(load("D4"), census=True)).data
        self.assertEqual(json.dumps(first, sort_keys=True), json.dumps(second, sort_keys=True))


class CensusTest(SimpleTestCase):
    def test_cyclic_six_pairs(self):
        c6 = load("C6")
        stats = nonfactor_census(c6, 2)
        self.assertEqual(stats.tested, 5)
        self.assertEqual(stats.nonfactors, 2)
        self.assertEqual([c6.format_subset(a) for a in stats.examples], ["{e,a^2}", "{e,a^4}"])
        self.assertTrue(stats.complete)

    def test_elementary_abelian_quads(self):
        stats = nonfactor_census(load("C2^3"), 4)
        self.assertEqual((stats.tested, stats.nonfactors), (35, 0))

    def test_examples_limit(self):
        stats = nonfactor_census(load("C9"), 3, examples_limit=1)
        self.assertEqual(len(stats.examples), 1)
        self.assertGreater(stats.nonfactors, 1)

    def test_rejects_non_divisor(self):
        with self.assertRaises(NotLagrange):
            nonfactor_census(load("C6"), 4)

    def test_main_witnesses_appear_among_census_nonfactors(self):
        for expression in ("C10", "C12", "D5", "C2xC6", "D6", "Dic3"):
            g = load(expression)
            witnesses = [
                normalize_to_identity(g, build_main_witness(g, p)) for p in enumerate_main_witness_params(g)
            ]
            self.assertTrue(witnesses, expression)
            censuses = {}
            for a in witnesses:
                d = len(a)
                if d not in censuses:
                    stats = nonfactor_census(g, d, examples_limit=comb(g.order - 1, d - 1))
                    censuses[d] = set(stats.examples)
                with self.subTest(group=expression, witness=g.format_subset(a)):
                    self.assertIn(a, censuses[d])

    def test_census_mode_covers_every_size(self):
        g = load("C6")
        report = check_strong_cfs(g, census=True)
        self.assertEqual([s.size for s in report.sizes], [1, 2, 3, 6])
        self.assertEqual(report.sizes[1].nonfactors, 2)
        self.assertTrue(all(s.complete for s in report.sizes))

    def test_census_and_short_circuit_agree(self):
        for entry in catalog_entries(12):
            g = load(entry.expression)
            with self.subTest(group=entry.expression):
                census = check_strong_cfs(g, census=True)
                quick = check_strong_cfs(g)
                self.assertEqual(census.holds, quick.holds)
                self.assertEqual(census.witness, quick.witness)


class OrbitPruningTest(SimpleTestCase):
    def test_orbit_members_contain_identity(self):
        d4 = load("D4")
        members = OrbitPruner(d4).orbit(parse_subset(d4, "{e,a}"))
        self.assertTrue(all(0 in m and len(m) == 2 for m in members))
        self.assertEqual(members[0], parse_subset(d4, "{e,a}"))

    def test_visit_skips_covered_subsets(self):
        c4 = load("C4")
        pruner = OrbitPruner(c4)
        members = pruner.visit(parse_subset(c4, "{e,a}"))
        self.assertIn(parse_subset(c4, "{e,a^3}"), members)
        self.assertIsNone(pruner.visit(parse_subset(c4, "{e,a^3}")))

    def test_pruned_reports_match_unpruned(self):
        for entry in catalog_entries(9):
            g = load(entry.expression)
            with self.subTest(group=entry.expression):
                full = check_strong_cfs(g, census=True)
                pruned = check_strong_cfs(g, census=True, prune=True)
                self.assertEqual(pruned.holds, full.holds)
                self.assertEqual(pruned.witness, full.witness)
                for a, b in zip(pruned.sizes, full.sizes):
                    self.assertEqual((a.tested, a.nonfactors, a.examples), (b.tested, b.nonfactors, b.examples))
                self.assertLessEqual(pruned.nodes_explored, full.nodes_explored)


class TheoremTest(SimpleTestCase):
    def test_up_to_order_four(self):
        report = verify_theorem(4)
        self.assertTrue(report.passed)
        self.assertEqual(report.excluded_trivial, ("C1",))
        self.assertEqual(report.observed_positive, ("C2", "C3", "C4", "C2^2"))

    def test_up_to_order_nine(self):
        report = verify_theorem(9)
        self.assertTrue(report.passed)
        self.assertIn("C3^2", report.observed_positive)
        self.assertNotIn("C9", report.observed_positive)

    def test_up_to_order_twelve(self):
        report = verify_theorem(12)
        self.assertTrue(report.passed)
        self.assertEqual(report.expected_positive, POSITIVE_UP_TO_12)
        self.assertEqual(report.observed_positive, POSITIVE_UP_TO_12)
        self.assertEqual(len(report.reports), 24)

    def test_only_trivial_group(self):
        report = verify_theorem(1)
        self.assertTrue(report.passed)
        self.assertEqual(report.excluded_trivial, ("C1",))
        self.assertEqual(report.expected_positive, ())

    def test_bound(self):
        with self.assertRaises(CatalogBoundExceeded):
            verify_theorem(17)
        with self.assertRaises(CatalogBoundExceeded):
            verify_theorem(12, bound=10)

    def test_undecided_groups_are_mismatches(self):
        report = verify_theorem(4, node_budget=1)
        self.assertFalse(report.passed)
        self.assertEqual(report.mismatches, ("C4", "C2^2"))

    def test_custom_runner(self):
        seen = []

        def runner(entries, **options):
            seen.extend(entry.expression for entry in entries)
            return [check_strong_cfs(load(entry.expression), **options) for entry in entries]

        verify_theorem(3, runner=runner)
        self.assertEqual(seen, ["C1", "C2", "C3"])


class FramesTest(SimpleTestCase):
    def test_census_frame(self):
        g = load("C6")
        frame = census_frame(g, check_strong_cfs(g, census=True))
        self.assertEqual(list(frame.index), [1, 2, 3, 6])
        self.assertEqual(frame.loc[1, "tested"], "trivial")
        self.assertEqual(frame.loc[2, "non-factors"], 2)
        self.assertEqual(frame.loc[2, "examples"], "{e,a^2} {e,a^4}")

    def test_theorem_frame(self):
        frame = theorem_frame(verify_theorem(4))
        self.assertEqual(frame.loc["C1", "verdict"], "trivial")
        self.assertEqual(frame.loc["C4", "expected"], "holds")

    def test_lemma_frame(self):
        frame = lemma_frame(theorem_cases_suite())
        self.assertEqual(list(frame["result"]), ["pass", "pass", "pass"])


class LemmaSuitesTest(SimpleTestCase):
    def assertAllOk(self, summaries):
        for summary in summaries:
            self.assertTrue(summary.ok, f"{summary.lemma} on {summary.scope}: {summary.failures}")

    def test_subgroup_lifting(self):
        summaries = subgroup_lifting_suite(8)
        self.assertAllOk(summaries)
        checked = {s.scope: s.checked for s in summaries}
        self.assertEqual(checked["C1"], 0)
        self.assertGreater(checked["D4"], 0)

    def test_order2(self):
        summaries = order2_suite(12)
        self.assertAllOk(summaries)
        checked = {s.scope: s.checked for s in summaries}
        self.assertEqual(checked["C6"], 5)
        self.assertNotIn("C9", checked)

    def test_elementary2(self):
        summaries = elementary2_suite()
        self.assertAllOk(summaries)
        self.assertEqual([s.checked for s in summaries], [1, 35, 455])

    def test_elementary3(self):
        summaries = elementary3_suite(20, 7)
        self.assertAllOk(summaries)
        self.assertEqual([s.checked for s in summaries], [1, 28, 20])
        self.assertIn("sample of 20", summaries[2].scope)

    def test_sampled_subsets_are_reproducible(self):
        first = sampled_subsets(27, 3, 15, 11)
        self.assertEqual(first, sampled_subsets(27, 3, 15, 11))
        self.assertEqual(first, sorted(first, key=Subset.lex_key))
        self.assertTrue(all(0 in a for a in first))
        self.assertEqual(len(sampled_subsets(9, 3, 100, 1)), 28)

    def test_main_witness(self):
        summaries = main_witness_suite(10)
        self.assertAllOk(summaries)
        checked = {s.scope: s.checked for s in summaries}
        self.assertEqual(checked["C10"], 40)
        self.assertEqual(checked["D5"], 40)
        self.assertEqual(checked["Q8"], 0)

    def test_order8(self):
        summaries = order8_suite()
        self.assertAllOk(summaries)
        checked = {s.scope: s.checked for s in summaries}
        self.assertEqual(checked, {"C8": 0, "C4xC2": 8, "C2^3": 0, "D4": 0, "Q8": 24})

    def test_theorem_cases(self):
        summaries = theorem_cases_suite()
        self.assertAllOk(summaries)
        self.assertEqual({s.scope: s.checked for s in summaries}, {"D4": 3, "C8": 2, "C9": 5})

    def test_selection(self):
        summaries = verify_lemmas(only=["theorem-case", "order8-witness"])
        self.assertEqual([s.lemma for s in summaries], ["order8-witness"] * 5 + ["theorem-case"] * 3)


class TasksTest(SimpleTestCase):
    EAGER = {"CELERY_TASK_ALWAYS_EAGER": True, "CELERY_TASK_EAGER_PROPAGATES": True}

    def setUp(self):
        # Celery reads these under the CELERY_ settings namespace.
        self.previous = {key: celery_app.conf.get(key) for key in self.EAGER}
        celery_app.conf.update(self.EAGER)

    def tearDown(self):
        celery_app.conf.update(self.previous)

    def test_eager_mode_is_active(self):
        self.assertTrue(check_group_strong_cfs.app.conf.task_always_eager)

    def test_single_group_task(self):
        payload = check_group_strong_cfs.apply(args=("C6",)).get()
        serializer = CfsReportSerializer(data=payload)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.save(), check_strong_cfs(load("C6")))

    def test_distributed_runner_matches_sequential(self):
        distributed = verify_theorem(6, runner=check_entries_distributed)
        sequential = verify_theorem(6)
        self.assertEqual(distributed, sequential)

    def test_regression_task(self):
        self.assertEqual(verify_theorem_regression.apply(kwargs={"max_order": 4}).get(), "Verified 5 groups")

    def test_regression_task_fails_on_mismatch(self):
        options = {**settings.FACTORLAB, "NODE_BUDGET": 1}
        with override_settings(FACTORLAB=options), self.assertRaises(RuntimeError):
            verify_theorem_regression.apply(kwargs={"max_order": 4}).get()


class ClassificationCommandsTest(SimpleTestCase):
    def test_check_cfs_holds(self):
        out = StringIO()
        call_command("check_cfs", "C3^2", stdout=out)
        self.assertIn("C3^2 has the strong CFS property", out.getvalue())

    def test_check_cfs_trivial_group(self):
        out = StringIO()
        call_command("check_cfs", "C1", stdout=out)
        self.assertIn("(trivial group)", out.getvalue())

    def test_check_cfs_fails_with_witness(self):
        out = StringIO()
        with self.assertRaises(SystemExit) as ctx:
            call_command("check_cfs", "C6", "--json", "-", stdout=out)
        self.assertEqual(ctx.exception.code, 2)
        document = json.loads(out.getvalue())
        self.assertEqual(document["verdict"], "fails")
        self.assertEqual(document["witness"], "{e,a^2}")
        _, report = load_report(document)
        self.assertEqual(report, check_strong_cfs(load("C6")))

    def test_check_cfs_census_table(self):
        out = StringIO()
        with self.assertRaises(SystemExit):
            call_command("check_cfs", "C6", "--census", stdout=out)
        self.assertIn("non-factors", out.getvalue())
        self.assertIn("{e,a^2} {e,a^4}", out.getvalue())

    def test_check_cfs_node_budget(self):
        with self.assertRaises(SystemExit) as ctx:
            call_command("check_cfs", "C8", "--node-budget", "1", stdout=StringIO())
        self.assertEqual(ctx.exception.code, 3)

    def test_verify_theorem(self):
        out = StringIO()
        call_command("verify_theorem", "--max-order", "9", stdout=out)
        self.assertIn("Classification verified", out.getvalue())
        self.assertIn("Excluded as trivial: C1", out.getvalue())

    def test_verify_theorem_errors(self):
        with self.assertRaises(CommandError):
            call_command("verify_theorem", "--max-order", "20", stdout=StringIO())
        with self.assertRaises(SystemExit) as ctx:
            call_command("verify_theorem", "--max-order", "4", "--node-budget", "1", stdout=StringIO())
        self.assertEqual(ctx.exception.code, 3)

    def test_verify_theorem_json(self):
        out = StringIO()
        call_command("verify_theorem", "--max-order", "6", "--prune", "--json", "-", stdout=out)
        envelope, report = load_report(json.loads(out.getvalue()))
        self.assertEqual(envelope["verdict"], "verified")
        self.assertTrue(envelope["inputs"]["prune"])
        self.assertTrue(report.passed)
        self.assertTrue(all(cfs.pruned for cfs in report.reports))

    def test_verify_lemmas(self):
        out = StringIO()
        call_command("verify_lemmas", "--lemma", "theorem-case", stdout=out)
        self.assertIn("All 3 lemma checks passed", out.getvalue())

    def test_verify_lemmas_json(self):
        out = StringIO()
        call_command("verify_lemmas", "--lemma", "order8-witness", "--json", "-", stdout=out)
        envelope, summaries = load_report(json.loads(out.getvalue()))
        self.assertEqual(envelope["verdict"], "verified")
        self.assertEqual(len(summaries), 5)
        self.assertTrue(all(summary.ok for summary in summaries))
