"""Derivation algebras and matrix Lie algebras

A derivation of X is a linear map D with D[u, v] = [Du, v] + [u, Dv]. The
conditions on the n^2 entries of D are linear, so Der(X) is a kernel.
"""

from collections.abc import Sequence
from itertools import combinations
from logging import getLogger

from vwlab.errors import DimensionError, NotALieAlgebraError, NotASubalgebraError
from vwlab.exactmath import ExactMatrix, FieldSpec, Subspace, kernel_basis
from vwlab.lie.algebra import LieAlgebra, validate_lie

logger = getLogger(__name__)


def derivation_system(algebra: LieAlgebra) -> ExactMatrix:
    """Coefficient matrix of the derivation conditions

    Unknowns are the entries d[r][c] of D in row-major order; D acts on
    coordinate columns, so D x_i = sum_r d[r][i] x_r. For every pair i < j and
    every output coordinate m there is one equation

        sum_k c[i][j][k] d[m][k] - sum_r c[r][j][m] d[r][i] - sum_r c[i][r][m] d[r][j] = 0
    """
    n = algebra.dim
    field = algebra.field
    c = algebra.constants()
    rows = []
    for i, j in combinations(range(n), 2):
        for m in range(n):
            row = [field.zero] * (n * n)
            for k in range(n):
                row[m * n + k] = row[m * n + k] + c[i][j][k]
            for r in range(n):
                row[r * n + i] = row[r * n + i] - c[r][j][m]
                row[r * n + j] = row[r * n + j] - c[i][r][m]
            rows.append(row)
    return ExactMatrix.from_rows(field, rows, cols=n * n)


def is_derivation(algebra: LieAlgebra, d: ExactMatrix) -> bool:
    """Check D[x_i, x_j] = [D x_i, x_j] + [x_i, D x_j] on every basis pair
    """
    if d.shape != (algebra.dim, algebra.dim):
        raise DimensionError(f"Derivation matrix has shape {d.shape}, expected {(algebra.dim, algebra.dim)}")
    basis = algebra.basis_vectors()
    images = d.column_vectors()
    for i in range(algebra.dim):
        for j in range(i + 1, algebra.dim):
            lhs = d.matvec(algebra.bracket(basis[i], basis[j]))
            rhs = [a + b for a, b in zip(algebra.bracket(images[i], basis[j]),
                                         algebra.bracket(basis[i], images[j]))]
            if list(lhs) != rhs:
                return False
    return True


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """AB - BA
    """
    return a.matmul(b) - b.matmul(a)


def matrix_algebra(field: FieldSpec,
                   matrices: Sequence[ExactMatrix],
                   labels: Sequence[str] | None = None) -> LieAlgebra:
    """The Lie algebra spanned by linearly independent square matrices under the commutator

    Parameters
    ----------
    field : FieldSpec
        Ground field
    matrices : Sequence[ExactMatrix]
        Basis matrices, all m x m; their span must be closed under AB - BA
    labels : Sequence[str] | None, optional
        Basis labels

    Raises
    ------
    NotASubalgebraError
        The span is not closed under the commutator
    ValueError
        The matrices are linearly dependent
    """
    matrices = list(matrices)
    if not matrices:
        return LieAlgebra(field, [], labels=labels, realization=[])
    size = matrices[0].rows * matrices[0].cols
    span = Subspace.span(field, size, [mat.entries() for mat in matrices])
    if span.dim != len(matrices):
        raise ValueError(f"{len(matrices)} matrices span only a {span.dim}-dimensional space")

    # coordinates in the given basis, via the RREF basis of the span
    to_given = ExactMatrix.from_columns(field, [span.coordinates(mat.entries()) for mat in matrices],
                                        rows=span.dim).inverse()
    table = []
    for a in matrices:
        plane = []
        for b in matrices:
            flat = commutator(a, b).entries()
            if not span.contains(flat):
                raise NotASubalgebraError("Matrix span is not closed under the commutator")
            plane.append(to_given.matvec(span.coordinates(flat)))
        table.append(plane)
    return LieAlgebra(field, table, labels=labels, realization=matrices)


def derivations(algebra: LieAlgebra) -> tuple[LieAlgebra, list[ExactMatrix]]:
    """Der(X) as a Lie algebra under the commutator, with its matrix realization

    The basis is the RREF basis of the solution space of the derivation
    conditions, reshaped into n x n matrices. For an abelian X this is the
    basis e_ij of gl(n) in row-major order.

    Returns
    -------
    tuple[LieAlgebra, list[ExactMatrix]]
        Der(X), and the basis matrices realizing it

    Raises
    ------
    NotALieAlgebraError
        X fails antisymmetry or Jacobi
    """
    check = validate_lie(algebra)
    if not check:
        raise NotALieAlgebraError(f"Not a Lie algebra: {check.describe(algebra)}")
    n = algebra.dim
    field = algebra.field
    solutions = Subspace.span(field, n * n, kernel_basis(derivation_system(algebra)))
    basis_maps = [ExactMatrix(field, n, n, v) for v in solutions.vectors()]
    logger.info("Derivation algebra of a %s-dimensional algebra has dimension %s", n, len(basis_maps))
    labels = [f"d{k + 1}" for k in range(len(basis_maps))]
    return matrix_algebra(field, basis_maps, labels=labels), basis_maps
