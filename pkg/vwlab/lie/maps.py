"""Linear maps between Lie algebras and homomorphism checks
"""

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

from vwlab.errors import DimensionError, FieldError
from vwlab.exactmath import ExactMatrix, Subspace, Vector, kernel, rank
from vwlab.lie.algebra import LieAlgebra


class HomStatus(StrEnum):
    NOT_HOM = 'not-hom'
    HOM = 'hom'
    MONO_HOM = 'mono-hom'


@dataclass(frozen=True)
class LinearMap:
    """A linear map between two algebras, as a codomain-dim x domain-dim matrix

    Column i is the image of the i-th domain basis vector.

    Raises
    ------
    DimensionError
        The matrix shape does not fit the two algebras
    FieldError
        Domain, codomain and matrix are not over one field
    """
    domain: LieAlgebra
    codomain: LieAlgebra
    matrix: ExactMatrix

    def __post_init__(self):
        if self.domain.field != self.codomain.field or self.matrix.field != self.domain.field:
            raise FieldError(f"Map mixes fields {self.domain.field}, {self.codomain.field}, {self.matrix.field}")
        if self.matrix.shape != (self.codomain.dim, self.domain.dim):
            raise DimensionError(f"Map matrix has shape {self.matrix.shape}, "
                                 f"expected {(self.codomain.dim, self.domain.dim)}")

    @classmethod
    def from_images(cls, domain: LieAlgebra, codomain: LieAlgebra, images: Sequence[Sequence]) -> "LinearMap":
        """Build the map sending the i-th basis vector to ``images[i]``
        """
        if len(images) != domain.dim:
            raise DimensionError(f"Got {len(images)} images for a {domain.dim}-dimensional domain")
        columns = [codomain.coerce_vector(v) for v in images]
        return cls(domain, codomain, ExactMatrix.from_columns(domain.field, columns, rows=codomain.dim))

    def apply(self, v: Sequence) -> Vector:
        return self.matrix.matvec(self.domain.coerce_vector(v))

    __call__ = apply

    def images(self) -> tuple[Vector, ...]:
        return self.matrix.column_vectors()


def identity_map(algebra: LieAlgebra) -> LinearMap:
    return LinearMap(algebra, algebra, ExactMatrix.identity(algebra.field, algebra.dim))


def zero_map(domain: LieAlgebra, codomain: LieAlgebra) -> LinearMap:
    return LinearMap(domain, codomain, ExactMatrix.zeros(domain.field, codomain.dim, domain.dim))


def compose(outer: LinearMap, inner: LinearMap) -> LinearMap:
    """outer ∘ inner

    Raises
    ------
    DimensionError
        The codomain of inner is not the domain of outer
    """
    if inner.codomain.dim != outer.domain.dim:
        raise DimensionError(f"Cannot compose: inner lands in dimension {inner.codomain.dim}, "
                             f"outer starts in dimension {outer.domain.dim}")
    return LinearMap(inner.domain, outer.codomain, outer.matrix.matmul(inner.matrix))


def image(f: LinearMap) -> Subspace:
    return Subspace.span(f.codomain.field, f.codomain.dim, f.images())


def map_kernel(f: LinearMap) -> Subspace:
    return kernel(f.matrix)


def preserves_brackets(f: LinearMap) -> bool:
    """f[x_i, x_j] = [f x_i, f x_j] on every basis pair
    """
    images = f.images()
    n = f.domain.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = f.matrix.matvec(f.domain.basis_bracket(i, j))
            rhs = f.codomain.bracket(images[i], images[j])
            if lhs != rhs:
                return False
    return True


def check_hom(f: LinearMap) -> HomStatus:
    """Classify a linear map as not a homomorphism, a homomorphism, or an injective one
    """
    if not preserves_brackets(f):
        return HomStatus.NOT_HOM
    if rank(f.matrix) == f.domain.dim:
        return HomStatus.MONO_HOM
    return HomStatus.HOM


def is_isomorphic_via(f: LinearMap) -> bool:
    """True when f is an injective homomorphism between algebras of equal dimension
    """
    if f.domain.dim != f.codomain.dim:
        return False
    return check_hom(f) == HomStatus.MONO_HOM


def corestrict(f: LinearMap, target: LieAlgebra, s: Subspace) -> LinearMap:
    """Read f as a map into ``target``, the algebra induced on a subspace S

    ``target`` must be the algebra on the RREF basis of S (as built by
    ``subalgebra_as_algebra``).

    Raises
    ------
    ValueError
        The image of f does not lie in S
    """
    if target.dim != s.dim:
        raise DimensionError(f"Target algebra has dimension {target.dim}, subspace has dimension {s.dim}")
    return LinearMap.from_images(f.domain, target, [s.coordinates(v) for v in f.images()])
