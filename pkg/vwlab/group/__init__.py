"""Finite matrix groups over prime fields
"""

from vwlab.group.matrix_group import (
    ElementSet,
    MatrixGroup,
    batch_inverses,
    closure,
    contains,
    element_key,
    element_order,
    element_orders,
    enumerate_group,
    generate,
    group_exponent,
    is_normal_in,
    is_subgroup_of,
    matrix_inverse,
    matrix_power,
)

from vwlab.group.commutators import (
    Convention,
    brute_force_commutator_subgroup,
    commutator,
    commutator_closure,
    commutator_subgroup,
    normal_closure,
)

from vwlab.group.series import (
    GroupSeriesReport,
    derived_series_grp,
    is_k_nilpotent_grp,
    is_n_solvable_grp,
    lower_central_series_grp,
)

from vwlab.group.relations import (
    RelationWord,
    conventions_satisfied,
    evaluate_relation,
    evaluate_word,
    load_relations,
    parse_relation,
    read_relation_lines,
    relation_convention_report,
)

from vwlab.group.semidirect import (
    block_element,
    split_block,
    translation,
    vector_semidirect,
)

from vwlab.group.io import (
    dump_generators,
    load_generators,
)
