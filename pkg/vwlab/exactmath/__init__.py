"""Exact scalars, matrices and subspaces over Q and GF(p)
"""

from vwlab.exactmath.field import (
    ArithOp,
    FieldKind,
    FieldSpec,
    Scalar,
    is_prime,
    scalar_arith,
)

from vwlab.exactmath.matrix import (
    ExactMatrix,
    Vector,
    add_vectors,
    is_zero_vector,
    kernel,
    kernel_basis,
    make_vector,
    pivot_columns,
    rank,
    rref,
    scale_vector,
    solve,
    unit_vector,
    zero_vector,
)

from vwlab.exactmath.subspace import (
    Subspace,
    subspace_contains,
    subspace_intersect,
    subspace_leq,
    subspace_span,
    subspace_sum,
)
