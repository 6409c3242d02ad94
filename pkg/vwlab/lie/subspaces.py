"""Bracket products of subspaces, generated subalgebras and ideals
"""

from collections.abc import Iterable, Sequence
from logging import getLogger

from vwlab.errors import DimensionError, FieldError, NotASubalgebraError
from vwlab.exactmath import Subspace, subspace_leq, subspace_sum
from vwlab.lie.algebra import LieAlgebra

logger = getLogger(__name__)


def _check_ambient(algebra: LieAlgebra, *subspaces: Subspace):
    for s in subspaces:
        if s.ambient != algebra.dim:
            raise DimensionError(f"Subspace of F^{s.ambient} given for a {algebra.dim}-dimensional algebra")
        if s.field != algebra.field:
            raise FieldError(f"Subspace over {s.field}, algebra over {algebra.field}")


def full_subspace(algebra: LieAlgebra) -> Subspace:
    return Subspace.full(algebra.field, algebra.dim)


def span_in(algebra: LieAlgebra, vectors: Iterable[Sequence]) -> Subspace:
    """Span of vectors of the algebra
    """
    return Subspace.span(algebra.field, algebra.dim, [algebra.coerce_vector(v) for v in vectors])


def product_subspace(algebra: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """[A, B]: the span of all [u, v] for u in a basis of A and v in a basis of B

    Raises
    ------
    DimensionError
        A or B is not a subspace of the algebra
    """
    _check_ambient(algebra, a, b)
    products = [algebra.bracket(u, v) for u in a.vectors() for v in b.vectors()]
    return Subspace.span(algebra.field, algebra.dim, products)


def is_subalgebra(algebra: LieAlgebra, s: Subspace) -> bool:
    """True when [S, S] lies in S
    """
    return subspace_leq(product_subspace(algebra, s, s), s)


def subalgebra_generated(algebra: LieAlgebra, vectors: Iterable[Sequence]) -> Subspace:
    """Least subalgebra containing the vectors

    Alternates span and bracket until nothing new appears.
    """
    current = span_in(algebra, vectors)
    rounds = 0
    while True:
        grown = subspace_sum(current, product_subspace(algebra, current, current))
        rounds += 1
        if grown == current:
            logger.debug("Subalgebra closure reached dimension %s after %s rounds", current.dim, rounds)
            return current
        current = grown


def is_ideal(algebra: LieAlgebra, s: Subspace) -> bool:
    """True when [L, S] lies in S
    """
    _check_ambient(algebra, s)
    return subspace_leq(product_subspace(algebra, full_subspace(algebra), s), s)


def is_ideal_of(algebra: LieAlgebra, parent: Subspace, s: Subspace) -> bool:
    """True when S lies in the subalgebra P and [P, S] lies in S
    """
    _check_ambient(algebra, parent, s)
    return subspace_leq(s, parent) and subspace_leq(product_subspace(algebra, parent, s), s)


def ideal_generated(algebra: LieAlgebra, vectors: Iterable[Sequence]) -> Subspace:
    """Least ideal containing the vectors
    """
    whole = full_subspace(algebra)
    current = span_in(algebra, vectors)
    while True:
        grown = subspace_sum(current, product_subspace(algebra, whole, current))
        if grown == current:
            return current
        current = grown


def subalgebra_as_algebra(algebra: LieAlgebra, s: Subspace, labels: Sequence[str] | None = None) -> LieAlgebra:
    """The Lie algebra induced on a subalgebra, in the RREF basis of S

    Basis vectors are labelled by their expansion in the parent's labels unless
    labels are given. A realization of the parent is carried over.

    Raises
    ------
    NotASubalgebraError
        S is not closed under the bracket
    """
    _check_ambient(algebra, s)
    vectors = s.vectors()
    table = []
    for u in vectors:
        plane = []
        for v in vectors:
            w = algebra.bracket(u, v)
            if not s.contains(w):
                raise NotASubalgebraError("Subspace is not closed under the bracket")
            plane.append(s.coordinates(w))
        table.append(plane)

    if labels is None:
        labels = [algebra.format_vector(v) for v in vectors]

    realization = None
    if algebra.realization is not None:
        realization = []
        for v in vectors:
            mat = None
            for c, basis_mat in zip(v, algebra.realization):
                if c:
                    term = basis_mat.scale(c)
                    mat = term if mat is None else mat + term
            if mat is None:
                first = algebra.realization[0]
                mat = first.scale(0)
            realization.append(mat)
    return LieAlgebra(algebra.field, table, labels=labels, realization=realization)
