#!/usr/bin/env python3

"""Test check reports and their text and JSON forms
"""

import json
from unittest import TestCase, main

from vwlab.errors import DimensionError
from vwlab.paperlab import CheckStatus, Report, Scenario, reports_to_json, reports_to_text


class TestReport(TestCase):
    """Test recording checks
    """
    def setUp(self):
        self.report = Report(Scenario.LIE, "Q")

    def test_expect(self):
        """A check passes exactly when computed equals expected
        """
        passed = self.report.expect("a", "first", "claim", [3, 1, 0], [3, 1, 0])
        failed = self.report.expect("b", "second", "claim", 2, 3, extra="x")
        self.assertEqual(passed.status, CheckStatus.PASS)
        self.assertEqual(failed.status, CheckStatus.FAIL)
        self.assertEqual(failed.data, {"computed": 2, "expected": 3, "extra": "x"})
        self.assertFalse(self.report.overall)
        self.assertEqual(self.report.ids(), ["a", "b"])
        self.assertEqual(self.report.counts(), {"pass": 1, "fail": 1, "skipped": 0})

    def test_duplicates_and_lookup(self):
        """Ids are unique and looked up by name
        """
        self.report.expect("a", "first", "claim", 1, 1)
        with self.assertRaises(ValueError):
            self.report.expect("a", "again", "claim", 1, 1)
        self.assertEqual(self.report.get("a").description, "first")
        with self.assertRaises(KeyError):
            self.report.get("missing")

    def test_skip_and_guarded(self):
        """Skipped checks do not fail the report; raised library errors do
        """
        self.report.skip("s", "skipped", "claim", "not here")
        self.assertTrue(self.report.overall)

        def broken():
            raise DimensionError("shape")

        result = self.report.guarded("g", "guarded", "claim", broken)
        self.assertEqual(result.status, CheckStatus.FAIL)
        self.assertEqual(result.data, {"error": "DimensionError: shape"})
        ok = self.report.guarded("h", "guarded", "claim", lambda: (1, 1, {"n": 2}))
        self.assertEqual(ok.data, {"computed": 1, "expected": 1, "n": 2})

    def test_serialization(self):
        """Notes appear only when present; text ends with the tally
        """
        self.report.expect("a", "first", "claim", ["span{e1}"], ["span{e1}"])
        data = self.report.to_json()
        self.assertNotIn("notes", data)
        self.assertEqual(data["checks"][0]["status"], "pass")
        self.report.notes.append("a reading")
        self.assertEqual(self.report.to_json()["notes"], ["a reading"])

        text = self.report.to_text()
        self.assertTrue(text.startswith("== lie over Q =="))
        self.assertIn("[PASS   ] a: first", text)
        self.assertIn("note: a reading", text)
        self.assertTrue(text.endswith("overall: PASS (1 passed, 0 failed, 0 skipped)"))

        other = Report(Scenario.GRAY, "GF(5)")
        other.expect("z", "last", "claim", 0, 1)
        combined = json.loads(reports_to_json([self.report, other]))
        self.assertFalse(combined["overall"])
        self.assertEqual([r["scenario"] for r in combined["reports"]], ["lie", "gray"])
        self.assertIn("== gray over GF(5) ==", reports_to_text([self.report, other]))


if __name__ == "__main__":
    main()
