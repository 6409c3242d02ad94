"""A library for exact computations in Lie algebras and finite matrix groups

In here, there is code that:

  - does exact linear algebra over Q and GF(p)
  - builds Lie algebras from structure constants, and computes their series,
    derivations, semidirect products and adjoint actions
  - enumerates matrix groups over GF(p) and computes commutator subgroups and series
  - builds and checks the group and Lie algebra counterexamples on varieties
    of nilpotent and solvable objects
"""

from vwlab.exactmath import (
    ExactMatrix,
    FieldSpec,
    Scalar,
    Subspace,
    kernel,
    rank,
    rref,
    subspace_intersect,
    subspace_span,
    subspace_sum,
)

from vwlab.lie import (
    LieAlgebra,
    LinearMap,
    adjoint_on_ideal,
    check_hom,
    derivations,
    derived_series,
    ideal_generated,
    is_ideal,
    is_isomorphic_via,
    load_algebra,
    lower_central_series,
    product_subspace,
    semidirect,
    standard_algebra,
    subalgebra_generated,
    validate_lie,
    verify_split_extension,
)

from vwlab.group import (
    ElementSet,
    MatrixGroup,
    commutator_subgroup,
    derived_series_grp,
    element_order,
    enumerate_group,
    evaluate_relation,
    group_exponent,
    load_generators,
    lower_central_series_grp,
    vector_semidirect,
)

from vwlab.paperlab import (
    build_group_witness,
    build_lie_witness,
    run_scenarios,
    verify_amalgam_obstruction,
    verify_gray_conditions,
    verify_group_counterexample,
    verify_lie_counterexample,
)
