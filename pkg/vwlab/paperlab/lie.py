"""Checklist for the Lie algebra counterexample

B_ψ = B ⋉_ψ X and B′_ψ′ = B′ ⋉_ψ′ X with X = F^3 abelian: both are
3-nilpotent and 2-solvable, built from two faithful representations of
Heisenberg algebras that agree on S.
"""

from logging import getLogger

from vwlab.exactmath import FieldSpec
from vwlab.lie import (HomStatus, LieAlgebra, canonical_split_maps, check_hom, compose, corestrict, derived_series,
                       format_series, format_subspace, image, is_isomorphic_via, is_k_nilpotent, is_n_solvable,
                       lower_central_series, semidirect, subalgebra_as_algebra, validate_lie,
                       verify_split_extension)
from vwlab.paperlab.report import Report, Scenario
from vwlab.paperlab.witnesses import LieWitness, build_lie_witness

logger = getLogger(__name__)

EXPECTED_LCS_DIMS = [6, 3, 1, 0]
EXPECTED_DERIVED_DIMS = [6, 3, 0]

TYPO_NOTES = (
    "The second semidirect product is built as B′ ⋉_ψ′ X, since ψ′ has domain B′.",
)


def semidirect_products(w: LieWitness) -> dict[str, LieAlgebra]:
    return {"Bpsi": semidirect(w.b, w.x, w.psi), "Bpsiprime": semidirect(w.b_prime, w.x, w.psi_prime)}


def expected_tables(products: dict[str, LieAlgebra]) -> dict[str, dict[str, str]]:
    """The nonzero brackets both products must have, written in their own field
    """
    bpsi, bpp = products["Bpsi"], products["Bpsiprime"]
    return {
        "Bpsi": {"[x,a]": "b",
                 "[x,e3]": bpsi.format_vector(bpsi.vector({"e2": -1})),
                 "[a,e2]": "e1",
                 "[b,e3]": "e1"},
        "Bpsiprime": {"[y,b]": "a",
                      "[y,e2]": bpp.format_vector(bpp.vector({"e3": -1})),
                      "[a,e2]": "e1",
                      "[b,e3]": "e1"},
    }


def verify_lie_counterexample(field: FieldSpec | None = None) -> Report:
    """Run the Lie checks in order

    Parameters
    ----------
    field : FieldSpec | None, optional
        Ground field, by default the rationals

    Returns
    -------
    Report
        Failures are recorded as checks, never raised
    """
    field = FieldSpec.rationals() if field is None else field
    report = Report(Scenario.LIE, str(field), notes=list(TYPO_NOTES))
    w = build_lie_witness(field)
    products = semidirect_products(w)

    algebras = {"S": w.s, "B": w.b, "B'": w.b_prime, "X": w.x, "gl3": w.gl3, "Der(X)": w.der, **products}
    validity = {name: bool(validate_lie(alg)) for name, alg in algebras.items()}
    report.expect("lie.validate", "Every constructed table is a Lie algebra", "Lie algebras over F",
                  all(validity.values()), True, algebras=validity)

    statuses = {"psi": str(check_hom(compose(w.v, w.psi))), "psi'": str(check_hom(compose(w.v, w.psi_prime)))}
    agree = compose(w.psi, w.m).matrix == compose(w.psi_prime, w.m_prime).matrix
    report.expect("lie.representations", "ψ and ψ′ are injective homomorphisms into Der(X) that agree on S",
                  "two faithful representations",
                  {"statuses": statuses, "agree_on_S": agree},
                  {"statuses": {"psi": str(HomStatus.MONO_HOM), "psi'": str(HomStatus.MONO_HOM)}, "agree_on_S": True})

    heisenberg = {}
    for name, psi in (("psi(B)", w.psi), ("psi'(B')", w.psi_prime)):
        img = image(psi)
        target = subalgebra_as_algebra(w.gl3, img)
        heisenberg[name] = {"dim": img.dim, "iso": is_isomorphic_via(corestrict(psi, target, img)),
                            "basis": format_subspace(w.gl3, img)}
    report.expect("lie.heisenberg", "ψ(B) and ψ′(B′) are isomorphic to the Heisenberg algebra via ψ and ψ′",
                  "both isomorphic to the 3-dimensional Heisenberg algebra",
                  {name: h["iso"] for name, h in heisenberg.items()}, {"psi(B)": True, "psi'(B')": True},
                  images=heisenberg)

    tables = {name: alg.bracket_table() for name, alg in products.items()}
    report.expect("lie.tables", "Bracket tables of both semidirect products", "the Lie algebra with basis",
                  tables, expected_tables(products))

    for name, alg in products.items():
        lcs = lower_central_series(alg)
        report.expect(f"lie.{name}.lcs", "Lower central dimensions and nilpotency class", "B_ψ is 3-nilpotent",
                      {"dims": lcs.dims, "class": lcs.class_label}, {"dims": EXPECTED_LCS_DIMS, "class": 3},
                      terms=format_series(alg, lcs))

    bpsi = products["Bpsi"]
    lcs = lower_central_series(bpsi)
    l2 = format_subspace(bpsi, lcs.terms[2]) if len(lcs.terms) > 2 else "0"
    report.expect("lie.Bpsi.L2", "The second lower central term of B_ψ", "L^2 = span{e1}", l2, "span{e1}")

    for name, alg in products.items():
        der = derived_series(alg)
        report.expect(f"lie.{name}.derived", "Derived dimensions and derived length", "B_ψ is 2-solvable",
                      {"dims": der.dims, "length": der.class_label}, {"dims": EXPECTED_DERIVED_DIMS, "length": 2},
                      terms=format_series(alg, der))

    not_2 = {name: not is_k_nilpotent(alg, 2) for name, alg in products.items()}
    report.expect("lie.not_2_nilpotent", "Neither product is 2-nilpotent", "the argument does not reach k = 2",
                  not_2, {"Bpsi": True, "Bpsiprime": True})

    split = {}
    for name, (b, alg) in (("Bpsi", (w.b, products["Bpsi"])), ("Bpsiprime", (w.b_prime, products["Bpsiprime"]))):
        maps = canonical_split_maps(b, w.x, alg)
        split[name] = verify_split_extension(alg, maps.k, maps.alpha, maps.beta)
    report.expect("lie.split_extension", "X → B ⋉ X → B with its section is a split extension",
                  "α ∘ β = id and (X, k) is a kernel of α", split, {"Bpsi": True, "Bpsiprime": True})

    solvable = {name: is_n_solvable(alg, 2) for name, alg in products.items()}
    report.expect("lie.solvable", "Both products lie in Sol_2(Lie)", "variety of 2-solvable algebras",
                  solvable, {"Bpsi": True, "Bpsiprime": True})
    logger.info("Lie scenario over %s finished: %s", field, "pass" if report.overall else "fail")
    return report
