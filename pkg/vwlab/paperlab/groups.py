"""Checklist for the group counterexample over GF(5)

B_ψ = B ⋉_ψ Z_5^3 and B′_ψ′ = B′ ⋉_ψ′ Z_5^3 are 3-nilpotent and 2-solvable
although B and B′ only meet in the abelian S.
"""

from logging import getLogger

import numpy as np

from vwlab.config import DEFAULT_ENUMERATION_CAP
from vwlab.group import (block_element, conventions_satisfied, derived_series_grp, enumerate_group, evaluate_relation,
                         group_exponent, lower_central_series_grp, relation_convention_report, translation,
                         vector_semidirect)
from vwlab.paperlab.report import Report, Scenario
from vwlab.paperlab.witnesses import GROUP_PRIME, build_group_witness

logger = getLogger(__name__)

EXPECTED_LCS_ORDERS = [15625, 125, 5, 1]
EXPECTED_DERIVED_ORDERS = [15625, 125, 1]

TYPO_NOTES = (
    "The matrix acting for y is read as ψ′(y): y generates B′, where ψ′ is defined.",
    "The second semidirect product is built as B′ ⋉_ψ′ Z_5^3, since ψ′ has domain B′.",
)

GROUP_AMALGAM_NOTE = ("That S → B and S → B′ have no amalgam in any solvable group is a classical result on group "
                      "amalgams and is assumed; it quantifies over all solvable groups and is not checked here.")


def verify_group_counterexample(cap: int = DEFAULT_ENUMERATION_CAP, progress: bool = False) -> Report:
    """Run the group checks in order and collect them in a report

    Parameters
    ----------
    cap : int, optional
        Enumeration cap
    progress : bool, optional
        Show progress bars while enumerating the semidirect products

    Returns
    -------
    Report
        Failures are recorded as checks, never raised
    """
    report = Report(Scenario.GROUPS, f"GF({GROUP_PRIME})", notes=[*TYPO_NOTES, GROUP_AMALGAM_NOTE])
    w = build_group_witness()

    holds = {name: {text: evaluate_relation(g, text) for text in rels} for name, (g, rels) in w.relations().items()}
    report.expect("grp.relations", "Presentation relations of B, B′ and S hold in the matrices",
                  "the relations are preserved",
                  all(v for rels in holds.values() for v in rels.values()), True, relations=holds)

    conventions = {name: conventions_satisfied(relation_convention_report(g, rels))
                   for name, (g, rels) in w.relations().items()}
    report.expect("grp.relations.convention", "Relations hold with [g,h] = g^-1 h^-1 g h",
                  "commutator convention", all("inverse-first" in c for c in conventions.values()), True,
                  conventions=conventions)

    orders = {"S": enumerate_group(w.s, cap=cap).order,
              "B": enumerate_group(w.b, cap=cap).order,
              "B'": enumerate_group(w.b_prime, cap=cap).order}
    report.expect("grp.orders", "|S| = 25 and |B| = |B′| = 125", "B, B′, S as presented groups",
                  orders, {"S": 25, "B": 125, "B'": 125})

    agree = all(np.array_equal(w.psi[label], w.psi_prime[label]) for label in w.s.labels)
    report.expect("grp.agree_on_S", "ψ and ψ′ agree on a and b", "ψ(a) = ψ′(a), ψ(b) = ψ′(b)", agree, True)

    products = {"Bpsi": vector_semidirect(w.b), "Bpsiprime": vector_semidirect(w.b_prime)}
    elements = {name: enumerate_group(g, cap=cap, progress=progress) for name, g in products.items()}
    report.expect("grp.semidirect.orders", "Both semidirect products have order 5^6", "B_ψ and B′_ψ′",
                  {name: e.order for name, e in elements.items()}, {"Bpsi": 15625, "Bpsiprime": 15625})

    lcs = {name: lower_central_series_grp(g, elements=elements[name], cap=cap) for name, g in products.items()}
    derived = {name: derived_series_grp(g, elements=elements[name], cap=cap) for name, g in products.items()}
    for name in products:
        report.expect(f"grp.{name}.lcs", "Lower central orders and nilpotency class", "3-nilpotent group",
                      {"orders": lcs[name].orders, "class": lcs[name].class_label},
                      {"orders": EXPECTED_LCS_ORDERS, "class": 3})

    gamma1 = lcs["Bpsi"].terms[1] if len(lcs["Bpsi"].terms) > 1 else elements["Bpsi"]
    members = {"b-block": block_element(w.psi["b"], np.zeros(3, dtype=np.int64), GROUP_PRIME) in gamma1,
               "t1": translation(3, 0, GROUP_PRIME) in gamma1,
               "t2": translation(3, 1, GROUP_PRIME) in gamma1}
    report.expect("grp.Bpsi.commutator", "[B_ψ, B_ψ] has order 125 and contains (ψ(b), 0), e1 and e2",
                  "[B_ψ, B_ψ] ≅ ⟨b⟩ ⋉ Z_5^2", {"order": gamma1.order, **members},
                  {"order": 125, "b-block": True, "t1": True, "t2": True})

    for name in products:
        report.expect(f"grp.{name}.derived", "Derived orders and derived length", "2-solvable group",
                      {"orders": derived[name].orders, "length": derived[name].class_label},
                      {"orders": EXPECTED_DERIVED_ORDERS, "length": 2})

    for name in products:
        terms = lcs[name].terms
        nontrivial = len(terms) > 2 and not terms[2].is_trivial()
        report.expect(f"grp.{name}.not_2_nilpotent", "The third lower central term is nontrivial",
                      "the argument does not reach k = 2", nontrivial, True,
                      order=terms[2].order if len(terms) > 2 else 1)

    report.expect("grp.Bpsi.exponent", "Every element of B_ψ has order dividing 5", "x^5 = a^5 = b^5 = 1",
                  group_exponent(elements["Bpsi"]), 5)
    logger.info("Group scenario finished: %s", "pass" if report.overall else "fail")
    return report
