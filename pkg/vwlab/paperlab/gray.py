"""The three hypotheses of the split-extension amalgamation criterion

For the Lie varieties Nil_k(Lie) with k >= 3 and Sol_n(Lie) with n >= 2:
  (a) S → B and S → B′ are monomorphisms inside the variety whose amalgam in
      a solvable algebra is obstructed;
  (b) ψ and ψ′ are monomorphisms into L = gl(3, F) agreeing on S;
  (c) B_ψ and B′_ψ′ lie in the variety.
"""

from logging import getLogger

from vwlab.exactmath import FieldSpec
from vwlab.lie import HomStatus, check_hom, compose, is_k_nilpotent, is_n_solvable, lower_central_series
from vwlab.paperlab.amalgam import verify_amalgam_obstruction
from vwlab.paperlab.groups import GROUP_AMALGAM_NOTE
from vwlab.paperlab.lie import semidirect_products
from vwlab.paperlab.report import CheckStatus, Report, Scenario
from vwlab.paperlab.witnesses import build_lie_witness

logger = getLogger(__name__)

NILPOTENCY_BOUNDS = (3, 4, 5)

AMALGAM_NOTE = ("Non-amalgamability in every solvable Lie algebra is concluded from the sl(2) check; "
                "the universally quantified statement itself is not computed.")


def verify_gray_conditions(field: FieldSpec | None = None) -> Report:
    """Run checks (a), (b), (c) for Nil_k(Lie), k in 3..5, and Sol_2(Lie)
    """
    field = FieldSpec.rationals() if field is None else field
    report = Report(Scenario.GRAY, str(field), notes=[AMALGAM_NOTE, GROUP_AMALGAM_NOTE])
    w = build_lie_witness(field)

    monos = {"S->B": str(check_hom(w.m)), "S->B'": str(check_hom(w.m_prime))}
    classes = {"S": lower_central_series(w.s).class_label,
               "B": lower_central_series(w.b).class_label,
               "B'": lower_central_series(w.b_prime).class_label}
    report.expect("gray.a.monos", "S → B and S → B′ are monomorphisms; S abelian, B and B′ 2-nilpotent",
                  "monomorphisms inside the subvariety", {"maps": monos, "classes": classes},
                  {"maps": {"S->B": str(HomStatus.MONO_HOM), "S->B'": str(HomStatus.MONO_HOM)},
                   "classes": {"S": 1, "B": 2, "B'": 2}})

    obstruction = verify_amalgam_obstruction(field).get("amalgam.sl2")
    if obstruction.status == CheckStatus.SKIPPED:
        report.skip("gray.a.obstruction", "The amalgam is obstructed in solvable algebras",
                    "cannot be amalgamated in any solvable Lie algebra", obstruction.data["reason"])
    else:
        report.expect("gray.a.obstruction", "The amalgam is obstructed in solvable algebras",
                      "cannot be amalgamated in any solvable Lie algebra",
                      str(obstruction.status), str(CheckStatus.PASS))

    statuses = {"psi": str(check_hom(w.psi)), "psi'": str(check_hom(w.psi_prime))}
    agree = compose(w.psi, w.m).matrix == compose(w.psi_prime, w.m_prime).matrix
    report.expect("gray.b.representations", "ψ and ψ′ are monomorphisms into gl(3, F) agreeing on S",
                  "L = gl(3, F)", {"statuses": statuses, "agree_on_S": agree},
                  {"statuses": {"psi": str(HomStatus.MONO_HOM), "psi'": str(HomStatus.MONO_HOM)},
                   "agree_on_S": True})

    products = semidirect_products(w)
    for k in NILPOTENCY_BOUNDS:
        report.expect(f"gray.c.nil{k}", f"Both products lie in Nil_{k}(Lie)", "B_ψ, B′_ψ′ in the subvariety",
                      {name: is_k_nilpotent(alg, k) for name, alg in products.items()},
                      {"Bpsi": True, "Bpsiprime": True})
    report.expect("gray.c.sol2", "Both products lie in Sol_2(Lie)", "B_ψ, B′_ψ′ in the subvariety",
                  {name: is_n_solvable(alg, 2) for name, alg in products.items()},
                  {"Bpsi": True, "Bpsiprime": True})
    report.expect("gray.c.nil2", "Neither product lies in Nil_2(Lie)", "the argument does not reach k = 2",
                  {name: is_k_nilpotent(alg, 2) for name, alg in products.items()},
                  {"Bpsi": False, "Bpsiprime": False})
    logger.info("Criterion checklist over %s finished: %s", field, "pass" if report.overall else "fail")
    return report
