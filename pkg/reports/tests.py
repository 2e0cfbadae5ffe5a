import json
import os
import subprocess
import sys
import tempfile
from io import StringIO
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from classification.cfs import check_strong_cfs, verify_theorem
from factoring.engine import ComplementSet, Side, find_all_complements, find_factorization, is_left_factor
from groups.catalog import load
from groups.summary import describe_group
from subsets.notation import parse_subset

from .commands import EXIT_INPUT_ERROR, EXIT_NEGATIVE
from .models import VerificationRun
from .serializers import (
    CfsReportSerializer,
    ComplementSetSerializer,
    FactorizationResultSerializer,
    FactorResultSerializer,
    GroupSummarySerializer,
    TheoremReportSerializer,
    load_report,
)


def rebuild(serializer_class, instance):
    """Serialize, pass through JSON text, and deserialize again."""
    data = json.loads(json.dumps(serializer_class(instance).data))
    serializer = serializer_class(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.save()


class SerializerRoundTripTest(SimpleTestCase):
    def test_factor_result(self):
        c9 = load("C9")
        for text in ("{e,a^3,a^6}", "{a,a^2,a^4}"):
            result = is_left_factor(c9, parse_subset(c9, text))
            self.assertEqual(rebuild(FactorResultSerializer, result), result)

    def test_subset_representation(self):
        c4 = load("C4")
        data = FactorResultSerializer(is_left_factor(c4, parse_subset(c4, "{e,a}"))).data
        self.assertEqual(data["complement"], {"order": 4, "elements": [0, 2]})
        self.assertEqual(data["side"], "left")
        self.assertEqual(data["reason"], "complement-found")
        self.assertEqual(data["verdict"], "factor")

    def test_invalid_subset(self):
        data = FactorResultSerializer(is_left_factor(load("C4"), load("C4").full_subset())).data
        data = {**data, "complement": {"order": 4, "elements": [9]}}
        serializer = FactorResultSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn("complement", serializer.errors)

    def test_complement_set(self):
        g = load("C2^2")
        a = parse_subset(g, "{e,a}")
        found = ComplementSet(a, Side.LEFT, tuple(find_all_complements(g, a)))
        self.assertEqual(rebuild(ComplementSetSerializer, found), found)

    def test_factorization_result(self):
        for expression, sizes in (("C2^3", [2, 2, 2]), ("A4", [2, 3, 2])):
            result = find_factorization(load(expression), sizes)
            self.assertEqual(rebuild(FactorizationResultSerializer, result), result)

    def test_cfs_report(self):
        report = check_strong_cfs(load("D4"), census=True)
        self.assertEqual(rebuild(CfsReportSerializer, report), report)

    def test_holding_report_cannot_carry_witness(self):
        data = json.loads(json.dumps(CfsReportSerializer(check_strong_cfs(load("C6"))).data))
        data["holds"] = True
        serializer = CfsReportSerializer(data=data)
        self.assertFalse(serializer.is_valid())
        self.assertIn("witness", serializer.errors)

    def test_theorem_report(self):
        report = verify_theorem(6)
        self.assertEqual(rebuild(TheoremReportSerializer, report), report)

    def test_group_summary(self):
        summary = describe_group(load("S3"))
        self.assertEqual(rebuild(GroupSummarySerializer, summary), summary)


class DocumentTest(SimpleTestCase):
    def test_envelope_fields(self):
        out = StringIO()
        call_command("group_info", "C2^2", "--json", "-", stdout=out)
        document = json.loads(out.getvalue())
        self.assertEqual(
            sorted(document),
            ["command", "complement", "inputs", "report", "stats", "verdict", "version", "witness"],
        )
        self.assertEqual(document["version"], "1.0.0")
        envelope, summary = load_report(document)
        self.assertEqual(envelope["command"], "group_info")
        self.assertEqual(summary, describe_group(load("C2^2")))

    def test_writes_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "report.json"
            out = StringIO()
            call_command("is_factor", "C4", "{e,a}", "--json", str(path), stdout=out)
            document = json.loads(path.read_text())
            self.assertEqual(document["complement"], "{e,a^2}")
            self.assertIn("is a left factor", out.getvalue())

    def test_unwritable_path(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(CommandError):
                call_command("is_factor", "C4", "{e,a}", "--json", tmp, stdout=StringIO())

    def test_rejects_unknown_command(self):
        with self.assertRaises(KeyError):
            load_report({
                "command": "nope",
                "inputs": {},
                "verdict": "ok",
                "stats": {},
                "version": "1.0.0",
                "report": {},
            })


class RecordTest(TestCase):
    def test_record_stores_run(self):
        out = StringIO()
        call_command("is_factor", "C4", "{e,a}", "--record", stdout=out)
        run = VerificationRun.objects.get()
        self.assertEqual(run.command, "is_factor")
        self.assertEqual(run.verdict, "factor")
        self.assertEqual(run.inputs["subset"], "{e,a}")
        self.assertEqual(run.payload["complement"], "{e,a^2}")
        self.assertIn(f"Recorded verification run {run.id}", out.getvalue())

    def test_negative_runs_are_recorded_before_exit(self):
        with self.assertRaises(SystemExit):
            call_command("check_cfs", "C6", "--record", stdout=StringIO())
        run = VerificationRun.objects.get()
        self.assertEqual(run.verdict, "fails")
        _, report = load_report(run.payload)
        self.assertEqual(report.witness, parse_subset(load("C6"), "{e,a^2}"))

    def test_ordering_is_newest_first(self):
        call_command("group_info", "C2", "--record", stdout=StringIO())
        call_command("group_info", "C3", "--record", stdout=StringIO())
        self.assertEqual(
            [run.inputs["group"] for run in VerificationRun.objects.all()], ["C3", "C2"]
        )


def manage(*args):
    """Run manage.py in a child process and return its exit status."""
    env = {**os.environ, "DJANGO_SETTINGS_MODULE": "factorlab.settings"}
    completed = subprocess.run(
        [sys.executable, "manage.py", *args],
        cwd=settings.BASE_DIR,
        env=env,
        capture_output=True,
        text=True,
    )
    return completed.returncode, completed.stderr


class ExitStatusTest(SimpleTestCase):
    def test_usage_errors_exit_as_input_errors(self):
        for args in (
            ("is_factor", "C9"),
            ("is_factor", "C9", "{a,a^2,a^4}", "--side", "up"),
            ("verify_theorem", "--max-order", "x"),
        ):
            with self.subTest(args=args):
                code, stderr = manage(*args)
                self.assertEqual(code, EXIT_INPUT_ERROR)
                self.assertIn("error:", stderr)

    def test_bad_subset_is_an_input_error(self):
        code, _ = manage("is_factor", "C9", "{zz}")
        self.assertEqual(code, EXIT_INPUT_ERROR)

    def test_non_factor_keeps_negative_status(self):
        code, _ = manage("is_factor", "C9", "{a,a^2,a^4}")
        self.assertEqual(code, EXIT_NEGATIVE)

    def test_call_command_raises_command_error(self):
        with self.assertRaises(CommandError):
            call_command("is_factor", "C9", stdout=StringIO())
        with self.assertRaises(CommandError):
            call_command("verify_theorem", "--max-order", "x", stdout=StringIO())
