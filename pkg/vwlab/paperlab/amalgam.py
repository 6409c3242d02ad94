"""Checklist for the sl(2) obstruction to amalgamating ψ(B) and ψ′(B′)

P is the subalgebra of gl(3, F) generated by both images and U = span{e12, e13}
is an ideal of P. The adjoint action of P on U has image sl(2, F), which is
not solvable, so no solvable algebra contains an amalgam of B and B′ over S.
"""

from logging import getLogger

from vwlab.exactmath import ExactMatrix, FieldSpec
from vwlab.lie import (LieAlgebra, LinearMap, adjoint_matrix, adjoint_on_ideal, derived_series, full_subspace,
                       gl_index, is_ideal_of, is_isomorphic_via, product_subspace, sl2, span_in,
                       subalgebra_as_algebra, subalgebra_generated)
from vwlab.paperlab.report import Report, Scenario
from vwlab.paperlab.witnesses import build_lie_witness

logger = getLogger(__name__)

AD_PSI_X = [[0, 0], [1, 0]]
AD_PSI_PRIME_Y = [[0, 1], [0, 0]]

CHAR_2_REASON = "sl(2, F) is not simple in characteristic 2; the generated image is nilpotent there"


def sl2_witness(domain: LieAlgebra, target: LieAlgebra) -> LinearMap:
    """Traceless 2 x 2 matrices written in the basis (e, h, f) of sl(2)

    [[a, b], [c, -a]] = b e + a h + c f; ``domain`` must carry a 2 x 2 realization.
    """
    images = []
    for mat in domain.realization:
        images.append([mat[0, 1], mat[0, 0], mat[1, 0]])
    return LinearMap.from_images(domain, target, images)


def verify_amalgam_obstruction(field: FieldSpec | None = None) -> Report:
    """Run the amalgam checks; in characteristic 2 the sl(2) checks are skipped

    Parameters
    ----------
    field : FieldSpec | None, optional
        Ground field, by default the rationals
    """
    field = FieldSpec.rationals() if field is None else field
    report = Report(Scenario.AMALGAM, str(field))
    w = build_lie_witness(field)
    gl3 = w.gl3

    p = subalgebra_generated(gl3, [*w.psi.images(), *w.psi_prime.images()])
    report.expect("amalgam.P.dim", "P = ⟨ψ(B) ∪ ψ′(B′)⟩ in gl(3, F)", "the subalgebra P", p.dim, 5,
                  basis=[gl3.format_vector(v) for v in p.vectors()])

    e12 = gl3.basis_vector(gl_index(3, 1, 2))
    e13 = gl3.basis_vector(gl_index(3, 1, 3))
    u = span_in(gl3, [e12, e13])
    report.expect("amalgam.U.ideal", "U = span{e12, e13} is an ideal of P", "is an ideal of P",
                  is_ideal_of(gl3, p, u), True)

    ad_x = adjoint_matrix(gl3, w.psi.images()[0], u)
    ad_y = adjoint_matrix(gl3, w.psi_prime.images()[0], u)
    report.expect("amalgam.ad.matrices", "ad of ψ(x) and ψ′(y) on U", "the adjoint map",
                  {"ad_psi_x": ad_x.to_json(), "ad_psi_prime_y": ad_y.to_json()},
                  {"ad_psi_x": ExactMatrix.from_rows(field, AD_PSI_X).to_json(),
                   "ad_psi_prime_y": ExactMatrix.from_rows(field, AD_PSI_PRIME_Y).to_json()})

    ad, ad_image = adjoint_on_ideal(gl3, p, u)
    report.expect("amalgam.ad.image", "ad(P) has dimension 3", "isomorphic to the special linear algebra",
                  ad_image.dim, 3, basis=[ad.codomain.format_vector(v) for v in ad_image.vectors()])

    if field.characteristic == 2:
        report.skip("amalgam.ad.perfect", "ad(P) is perfect and not solvable", "sl(2, F) is not solvable",
                    CHAR_2_REASON)
        report.skip("amalgam.sl2", "ad(P) is isomorphic to sl(2, F) via the trace-free coordinates",
                    "isomorphic to the special linear algebra", CHAR_2_REASON)
        return report

    image_algebra = subalgebra_as_algebra(ad.codomain, ad_image)
    whole = full_subspace(image_algebra)
    perfect = product_subspace(image_algebra, whole, whole) == whole
    report.expect("amalgam.ad.perfect", "ad(P) is perfect and not solvable", "sl(2, F) is not solvable",
                  {"perfect": perfect, "derived": derived_series(image_algebra).class_label},
                  {"perfect": True, "derived": "not-solvable"})

    witness = sl2_witness(image_algebra, sl2(field))
    report.expect("amalgam.sl2", "ad(P) is isomorphic to sl(2, F) via the trace-free coordinates",
                  "isomorphic to the special linear algebra", is_isomorphic_via(witness), True,
                  images=[witness.codomain.format_vector(v) for v in witness.images()])
    logger.info("Amalgam scenario over %s finished: %s", field, "pass" if report.overall else "fail")
    return report
