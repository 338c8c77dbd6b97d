from io import StringIO
from unittest.mock import patch
import json

from django.core.cache import cache
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from sdym.services import Report, VerificationService
from sdym.utils import Result

TEST_ENGINE = {"DEFAULT_DEGREE": 4, "DEFAULT_SEED": 42, "MATRIX_DIMENSION": 2, "ORACLE_LEVEL_CAP": 3}


@override_settings(SDYM=TEST_ENGINE)
class CommandTestCase(SimpleTestCase):

    def setUp(self):
        cache.clear()

    def call(self, *args, **options):
        out = StringIO()
        call_command(*args, stdout=out, **options)
        return out.getvalue()

    def call_json(self, *args, **options):
        return [json.loads(line) for line in self.call(*args, **options).splitlines() if line.strip()]


class ParseCommandTest(CommandTestCase):
    """manage.py parse"""

    def test_canonical_form(self):
        self.assertEqual(self.call("parse", "J_y").strip(), "J*X_zb")

    def test_latex(self):
        self.assertIn(r"\tau_{1}", self.call("parse", "tau1", format="latex"))

    def test_syntax_error_is_a_usage_error(self):
        """Malformed input exits with status 2."""
        with self.assertRaises(CommandError) as raised:
            self.call("parse", "X +")
        self.assertEqual(raised.exception.returncode, 2)

    def test_bad_format(self):
        with self.assertRaises(CommandError) as raised:
            self.call("parse", "X", format="html")
        self.assertEqual(raised.exception.returncode, 2)


class VerifyCommandTest(CommandTestCase):
    """manage.py verify"""

    def test_unknown_suite(self):
        with self.assertRaises(CommandError) as raised:
            self.call("verify", suite="everything")
        self.assertEqual(raised.exception.returncode, 2)

    def test_levels_above_cap(self):
        with self.assertRaises(CommandError) as raised:
            self.call("verify", suite="kac-moody", levels=4)
        self.assertEqual(raised.exception.returncode, 2)

    def test_reports_are_ndjson(self):
        """One report per line, sorted, every check passing."""
        reports = self.call_json("verify", suite="kac-moody", levels=0, degree=3)
        self.assertTrue(reports)
        ids = [f"{report['suite']}:{report['check']}" for report in reports]
        self.assertEqual(ids, sorted(ids))
        for report in reports:
            self.assertEqual(report["schema"], 1)
            self.assertEqual(report["status"], "pass")
            self.assertIsNone(report["witness"])
            self.assertEqual(report["config"]["degree"], 3)

    def test_failed_check_exits_with_one(self):
        """A failing check is still printed before the command fails."""
        failing = Report("core", "structure_table", "fail", "symbolic", "f_23^1 differs", 0.0, {})
        out = StringIO()
        with patch.object(VerificationService, "run", return_value=Result.success([failing])):
            with self.assertRaises(CommandError) as raised:
                call_command("verify", suite="core", stdout=out)
        self.assertEqual(raised.exception.returncode, 1)
        self.assertIn("core:structure_table", str(raised.exception))
        self.assertEqual(json.loads(out.getvalue())["witness"], "f_23^1 differs")

    def test_malformed_report_is_rejected(self):
        """A failed report without a witness never reaches the stream."""
        malformed = Report("core", "structure_table", "fail", "symbolic", None, 0.0, {})
        out = StringIO()
        with patch.object(VerificationService, "run", return_value=Result.success([malformed])):
            with self.assertRaises(CommandError) as raised:
                call_command("verify", suite="core", stdout=out)
        self.assertEqual(raised.exception.returncode, 1)
        self.assertIn("Malformed report core:structure_table", str(raised.exception))
        self.assertEqual(out.getvalue(), "")

    def test_service_error_exits_with_one(self):
        with patch.object(VerificationService, "run", return_value=Result.error("no fixtures")):
            with self.assertRaises(CommandError) as raised:
                self.call("verify", suite="core")
        self.assertEqual(raised.exception.returncode, 1)


class OracleCommandTest(CommandTestCase):
    """manage.py oracle"""

    def test_abelian_report(self):
        reports = self.call_json("oracle", fixture="abelian", degree=3)
        checks = {report["check"] for report in reports}
        self.assertIn("abelian:psdym", checks)
        self.assertIn("abelian:closed_form", checks)
        self.assertTrue(all(report["status"] == "pass" for report in reports))

    def test_random_needs_degree_two(self):
        with self.assertRaises(CommandError) as raised:
            self.call("oracle", degree=1)
        self.assertEqual(raised.exception.returncode, 2)

    def test_json_export(self):
        """--format json prints the fixture itself."""
        (fixture,) = self.call_json("oracle", degree=3, rng_seed=5, format="json")
        self.assertEqual(fixture["tag"], "random:5")
        self.assertEqual(fixture["degree"], 3)
        self.assertEqual(fixture["X"]["cap"], 3)


class HierarchyCommandTest(CommandTestCase):
    """manage.py hierarchy"""

    def test_json_levels(self):
        entries = self.call_json("hierarchy", seed_family="internal:1", depth=1)
        self.assertEqual([entry["level"] for entry in entries], [0, 1])
        self.assertEqual(entries[0]["family"], "tau1")

    def test_latex(self):
        output = self.call("hierarchy", seed_family="L:2", depth=0, format="latex")
        self.assertIn("% L2 level 0", output)
        self.assertIn(r"\Phi^{(0)}", output)

    def test_bad_family(self):
        with self.assertRaises(CommandError) as raised:
            self.call("hierarchy", seed_family="tau:1", depth=1)
        self.assertEqual(raised.exception.returncode, 2)
