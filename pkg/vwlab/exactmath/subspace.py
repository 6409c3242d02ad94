"""Subspaces of F^n kept as row-reduced bases, and their lattice operations
"""

from collections.abc import Iterable, Sequence

from vwlab.errors import DimensionError, FieldError
from vwlab.exactmath.field import FieldSpec, Scalar
from vwlab.exactmath.matrix import ExactMatrix, Vector, reduce_rows, kernel_basis, make_vector


class Subspace:
    """A subspace of F^n, stored as its reduced row-echelon basis

    Two subspaces are equal exactly when their bases are equal, since the
    RREF basis of a subspace is unique.

    Parameters
    ----------
    field : FieldSpec
        The ground field
    ambient : int
        n, the dimension of the ambient space
    basis : ExactMatrix
        A basis already in RREF with no zero rows; use ``Subspace.span`` to
        build a subspace from arbitrary vectors
    """
    __slots__ = ('field', 'ambient', 'basis', '_pivots')

    def __init__(self, field: FieldSpec, ambient: int, basis: ExactMatrix):
        if basis.cols != ambient:
            raise DimensionError(f"Basis has {basis.cols} columns, ambient dimension is {ambient}")
        if basis.field != field:
            raise FieldError(f"Basis is over {basis.field}, subspace is over {field}")
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self._pivots = tuple(next(c for c, v in enumerate(row) if v) for row in basis.row_vectors())

    @classmethod
    def span(cls, field: FieldSpec, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        """Smallest subspace containing the given vectors

        Raises
        ------
        DimensionError
            A vector does not have length ``ambient``
        """
        rows = []
        for ii, v in enumerate(vectors):
            if len(v) != ambient:
                raise DimensionError(f"Vector {ii} has length {len(v)}, ambient dimension is {ambient}")
            rows.append(list(make_vector(field, v)))
        reduced, pivots = reduce_rows(field, rows, ambient)
        return cls(field, ambient, ExactMatrix.from_rows(field, reduced[:len(pivots)], cols=ambient))

    @classmethod
    def zero(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, ExactMatrix.zeros(field, 0, ambient))

    @classmethod
    def full(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, ExactMatrix.identity(field, ambient))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    def vectors(self) -> tuple[Vector, ...]:
        """The RREF basis vectors
        """
        return self.basis.row_vectors()

    def is_zero(self) -> bool:
        return self.dim == 0

    def _check_compatible(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldError(f"Field mismatch: {self.field} and {other.field}")
        if self.ambient != other.ambient:
            raise DimensionError(f"Ambient dimension mismatch: {self.ambient} and {other.ambient}")

    def _reduce(self, v: Sequence[Scalar]) -> list[Scalar]:
        residue = list(make_vector(self.field, v))
        for row, pc in zip(self.basis.row_vectors(), self._pivots):
            factor = residue[pc]
            if factor:
                residue = [a - factor * b for a, b in zip(residue, row)]
        return residue

    def contains(self, v: Sequence) -> bool:
        """Exact membership test
        """
        if len(v) != self.ambient:
            raise DimensionError(f"Vector has length {len(v)}, ambient dimension is {self.ambient}")
        return not any(self._reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of v in the RREF basis

        Raises
        ------
        ValueError
            v is not in the subspace
        """
        if not self.contains(v):
            raise ValueError("Vector does not lie in the subspace")
        v = make_vector(self.field, v)
        return tuple(v[pc] for pc in self._pivots)

    def combine(self, coords: Sequence) -> Vector:
        """The vector with the given coordinates in the RREF basis
        """
        if len(coords) != self.dim:
            raise DimensionError(f"Got {len(coords)} coordinates for a {self.dim}-dimensional subspace")
        out = [self.field.zero] * self.ambient
        for c, row in zip(make_vector(self.field, coords), self.basis.row_vectors()):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    def __le__(self, other: "Subspace") -> bool:
        return subspace_leq(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient}, basis={self.basis.to_json()})"


def subspace_span(vectors: Iterable[Sequence], ambient: int, field: FieldSpec) -> Subspace:
    """Smallest subspace of F^ambient containing the given vectors
    """
    return Subspace.span(field, ambient, vectors)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """A + B
    """
    a._check_compatible(b)
    return Subspace.span(a.field, a.ambient, a.vectors() + b.vectors())


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """A ∩ B, read off the kernel of the stacked bases

    A vector (l, m) in the kernel of [A^T | -B^T] gives l.A = m.B, an element
    of both subspaces; all of A ∩ B arises this way.
    """
    a._check_compatible(b)
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.field, a.ambient)
    stacked = a.basis.transpose().hstack(b.basis.transpose().scale(-1))
    combos = []
    for null in kernel_basis(stacked):
        combos.append(a.combine(null[:a.dim]))
    return Subspace.span(a.field, a.ambient, combos)


def subspace_contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    """A ⊆ B
    """
    a._check_compatible(b)
    return all(b.contains(v) for v in a.vectors())
