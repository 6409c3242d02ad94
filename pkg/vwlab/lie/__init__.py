"""Finite-dimensional Lie algebras given by structure constants
"""

from vwlab.lie.algebra import (
    LieAlgebra,
    LieValidation,
    bracket,
    validate_lie,
)

from vwlab.lie.standard import (
    HeisenbergVariant,
    abelian,
    gl,
    gl_index,
    heisenberg3,
    sl2,
    standard_algebra,
    unit_matrix,
)

from vwlab.lie.subspaces import (
    full_subspace,
    ideal_generated,
    is_ideal,
    is_ideal_of,
    is_subalgebra,
    product_subspace,
    span_in,
    subalgebra_as_algebra,
    subalgebra_generated,
)

from vwlab.lie.series import (
    SeriesKind,
    SeriesReport,
    derived_series,
    format_series,
    format_subspace,
    is_k_nilpotent,
    is_n_solvable,
    lower_central_series,
)

from vwlab.lie.maps import (
    HomStatus,
    LinearMap,
    check_hom,
    compose,
    corestrict,
    identity_map,
    image,
    is_isomorphic_via,
    map_kernel,
    preserves_brackets,
    zero_map,
)

from vwlab.lie.derivations import (
    derivation_system,
    derivations,
    is_derivation,
    matrix_algebra,
)

from vwlab.lie.semidirect import (
    SplitMaps,
    acting_matrices,
    canonical_split_maps,
    semidirect,
    verify_split_extension,
)

from vwlab.lie.adjoint import (
    adjoint_matrix,
    adjoint_on_ideal,
)

from vwlab.lie.io import (
    dump_algebra,
    load_action,
    load_algebra,
    load_matrix,
    load_vectors,
)
