#!/usr/bin/env python3

"""Test the counterexample checklists end to end
"""

from unittest import TestCase, main

import numpy as np

from vwlab.exactmath import FieldSpec
from vwlab.group import enumerate_group, evaluate_relation
from vwlab.lie import check_hom, compose, HomStatus
from vwlab.paperlab import (ALL_PARTS, CheckStatus, Scenario, build_group_witness, build_lie_witness, resolve_parts,
                            run_scenarios, verify_amalgam_obstruction, verify_gray_conditions,
                            verify_group_counterexample, verify_lie_counterexample)
from vwlab.paperlab.amalgam import sl2_witness
from vwlab.paperlab.lie import expected_tables, semidirect_products
from vwlab.util.log_util import disable_all_logging

Q = FieldSpec.rationals()
GF5 = FieldSpec.prime(5)


class TestWitnesses(TestCase):
    """Test the concrete groups, algebras and maps
    """
    def test_group_witness(self):
        """The matrices satisfy the presentations and agree on S
        """
        w = build_group_witness()
        for name, (group, relations) in w.relations().items():
            for text in relations:
                with self.subTest(group=name, relation=text):
                    self.assertTrue(evaluate_relation(group, text))
        self.assertEqual(enumerate_group(w.b_prime).order, 125)
        self.assertTrue(np.array_equal(w.psi["a"], w.psi_prime["a"]))

    def test_lie_witness(self):
        """ψ and ψ′ are injective and Der(X) is gl(3) on the same basis
        """
        for field in (Q, GF5):
            w = build_lie_witness(field)
            self.assertEqual(w.der, w.gl3)
            self.assertEqual(check_hom(compose(w.v, w.psi)), HomStatus.MONO_HOM)
            self.assertEqual(check_hom(w.m_prime), HomStatus.MONO_HOM)

    def test_bracket_tables(self):
        """The products have the expected brackets, with -1 written as 4 over GF(5)
        """
        products = semidirect_products(build_lie_witness(GF5))
        self.assertEqual(products["Bpsi"].bracket_table(),
                         {"[x,a]": "b", "[x,e3]": "4*e2", "[a,e2]": "e1", "[b,e3]": "e1"})
        self.assertEqual(products["Bpsiprime"].bracket_table(), expected_tables(products)["Bpsiprime"])
        self.assertEqual(expected_tables(products)["Bpsiprime"]["[y,e2]"], "4*e3")


class TestLieScenario(TestCase):
    """Test the Lie checklist over several fields
    """
    def test_all_checks_pass(self):
        """Every Lie check passes over Q, GF(5) and GF(7)
        """
        for field in (Q, GF5, FieldSpec.prime(7)):
            with self.subTest(field=str(field)):
                report = verify_lie_counterexample(field)
                failed = [c.id for c in report.checks if c.status != CheckStatus.PASS]
                self.assertEqual(failed, [])
                self.assertTrue(report.overall)

    def test_series_values(self):
        """Dimensions [6, 3, 1, 0] and [6, 3, 0], with L^2 = span{e1}
        """
        report = verify_lie_counterexample()
        self.assertEqual(report.field, "Q")
        self.assertEqual(report.get("lie.Bpsi.lcs").data["computed"], {"dims": [6, 3, 1, 0], "class": 3})
        self.assertEqual(report.get("lie.Bpsiprime.derived").data["computed"], {"dims": [6, 3, 0], "length": 2})
        self.assertEqual(report.get("lie.Bpsi.L2").data["computed"], "span{e1}")
        self.assertEqual(report.ids()[0], "lie.validate")
        self.assertTrue(report.notes)


class TestAmalgamScenario(TestCase):
    """Test the sl(2) obstruction
    """
    def test_all_checks_pass(self):
        """P has dimension 5 and ad(P) is sl(2) over Q, GF(5) and GF(7)
        """
        for field in (GF5, FieldSpec.prime(7)):
            with self.subTest(field=str(field)):
                self.assertEqual(verify_amalgam_obstruction(field).counts(), {"pass": 6, "fail": 0, "skipped": 0})
        report = verify_amalgam_obstruction(Q)
        self.assertTrue(report.overall)
        self.assertEqual(report.counts(), {"pass": 6, "fail": 0, "skipped": 0})
        self.assertEqual(report.get("amalgam.ad.matrices").data["computed"],
                         {"ad_psi_x": [["0", "0"], ["1", "0"]], "ad_psi_prime_y": [["0", "1"], ["0", "0"]]})

    def test_characteristic_two(self):
        """The sl(2) checks are skipped in characteristic 2 and nothing fails
        """
        report = verify_amalgam_obstruction(FieldSpec.prime(2))
        self.assertTrue(report.overall)
        self.assertEqual(report.get("amalgam.sl2").status, CheckStatus.SKIPPED)
        self.assertEqual(report.get("amalgam.P.dim").status, CheckStatus.PASS)

    def test_sl2_witness(self):
        """Trace-free coordinates map a realized algebra onto sl(2)
        """
        from vwlab.lie import sl2
        target = sl2(GF5)
        witness = sl2_witness(target, target)
        self.assertEqual(witness.matrix.to_json(), [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])


class TestGrayScenario(TestCase):
    """Test the criterion checklist
    """
    def test_rationals(self):
        """All hypotheses hold for k = 3, 4, 5 and n = 2, and fail for k = 2
        """
        report = verify_gray_conditions(Q)
        self.assertTrue(report.overall)
        self.assertEqual(report.ids(), ["gray.a.monos", "gray.a.obstruction", "gray.b.representations",
                                        "gray.c.nil3", "gray.c.nil4", "gray.c.nil5", "gray.c.sol2",
                                        "gray.c.nil2"])
        self.assertEqual(len(report.notes), 2)

    def test_characteristic_two(self):
        """The obstruction is skipped, the rest still passes
        """
        report = verify_gray_conditions(FieldSpec.prime(2))
        self.assertEqual(report.get("gray.a.obstruction").status, CheckStatus.SKIPPED)
        self.assertTrue(report.overall)


class TestGroupScenario(TestCase):
    """Test the group checklist over GF(5)
    """
    def test_all_checks_pass(self):
        """Orders 15625, lower central orders [15625, 125, 5, 1], exponent 5
        """
        report = verify_group_counterexample()
        self.assertTrue(report.overall, [c.id for c in report.checks if c.status == CheckStatus.FAIL])
        self.assertEqual(report.field, "GF(5)")
        self.assertEqual(report.get("grp.Bpsi.lcs").data["computed"], {"orders": [15625, 125, 5, 1], "class": 3})
        self.assertEqual(report.get("grp.Bpsiprime.derived").data["computed"],
                         {"orders": [15625, 125, 1], "length": 2})
        self.assertEqual(report.get("grp.Bpsi.not_2_nilpotent").data["order"], 5)
        self.assertEqual(len(report.notes), 3)

    def test_cap_raises(self):
        """A cap below the product order stops the enumeration
        """
        from vwlab.errors import EnumerationCapError
        with disable_all_logging():
            with self.assertRaises(EnumerationCapError):
                verify_group_counterexample(cap=1000)


class TestRunScenarios(TestCase):
    """Test scenario selection
    """
    def test_resolve_parts(self):
        """'all' expands to the four scenarios in order
        """
        self.assertEqual(resolve_parts('all'), ALL_PARTS)
        self.assertEqual(resolve_parts('gray'), (Scenario.GRAY,))
        with self.assertRaises(ValueError):
            resolve_parts('everything')

    def test_run(self):
        """Reports come back in the order asked for, over the chosen field
        """
        reports = run_scenarios(['gray', 'lie'], field=GF5)
        self.assertEqual([r.scenario for r in reports], [Scenario.GRAY, Scenario.LIE])
        self.assertEqual({r.field for r in reports}, {"GF(5)"})


if __name__ == "__main__":
    main()
