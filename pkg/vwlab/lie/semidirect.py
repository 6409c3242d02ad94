"""Semidirect products B ⋉_ψ X and the split extensions they form

The basis of B ⋉_ψ X is the basis of B followed by the basis of X, and

    [(b, x), (b', x')] = ([b, b'], ψ(b) x' - ψ(b') x + [x, x'])
"""

from dataclasses import dataclass
from logging import getLogger

from vwlab.errors import DimensionError, FieldError, NotAHomomorphismError
from vwlab.exactmath import ExactMatrix, Subspace, subspace_leq
from vwlab.lie.algebra import LieAlgebra
from vwlab.lie.derivations import is_derivation
from vwlab.lie.maps import HomStatus, LinearMap, check_hom, compose, identity_map, image, map_kernel

logger = getLogger(__name__)


def acting_matrices(psi: LinearMap, size: int | None = None) -> list[ExactMatrix]:
    """ψ(b_i) as size x size matrices, read through the realization of ψ's codomain

    ``size`` defaults to the size of the realizing matrices, or 0 when there are none.

    Raises
    ------
    ValueError
        The codomain of ψ carries no matrix realization
    """
    realization = psi.codomain.realization
    if realization is None:
        raise ValueError("The codomain of the action must carry a matrix realization")
    if size is None:
        size = realization[0].rows if realization else 0
    out = []
    for column in psi.images():
        acc = ExactMatrix.zeros(psi.codomain.field, size, size)
        for c, mat in zip(column, realization):
            acc = acc + mat.scale(c)
        out.append(acc)
    return out


def semidirect(b: LieAlgebra, x: LieAlgebra, psi: LinearMap) -> LieAlgebra:
    """B ⋉_ψ X

    Parameters
    ----------
    b : LieAlgebra
        The acting algebra
    x : LieAlgebra
        The algebra acted on
    psi : LinearMap
        A homomorphism from B into an algebra realized by dim X x dim X
        matrices that are derivations of X, e.g. gl(n) for abelian X, or the
        algebra returned by ``derivations(X)``

    Returns
    -------
    LieAlgebra
        The semidirect product, basis B then X, labels carried over

    Raises
    ------
    NotAHomomorphismError
        ψ does not preserve brackets, or some ψ(b) is not a derivation of X
    FieldError
        The algebras are over different fields
    """
    if b.field != x.field or psi.domain.field != b.field:
        raise FieldError(f"Semidirect product mixes fields {b.field} and {x.field}")
    if psi.domain != b:
        raise DimensionError("The action must be defined on the acting algebra")
    if check_hom(psi) == HomStatus.NOT_HOM:
        raise NotAHomomorphismError("The action does not preserve brackets")

    actions = acting_matrices(psi)
    for ii, mat in enumerate(actions):
        if mat.shape != (x.dim, x.dim):
            raise DimensionError(f"Action of basis vector {ii} has shape {mat.shape}, expected {(x.dim, x.dim)}")
        if not is_derivation(x, mat):
            raise NotAHomomorphismError(f"Action of {b.labels[ii]} is not a derivation of X")

    nb, nx = b.dim, x.dim
    n = nb + nx
    field = b.field
    table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(nb):
        for j in range(nb):
            table[i][j][:nb] = b.basis_bracket(i, j)
        for j in range(nx):
            action = actions[i].column(j)
            table[i][nb + j][nb:] = action
            table[nb + j][i][nb:] = [-v for v in action]
    for i in range(nx):
        for j in range(nx):
            table[nb + i][nb + j][nb:] = x.basis_bracket(i, j)

    labels = list(b.labels) + list(x.labels)
    if len(set(labels)) != n:
        labels = list(b.labels) + [f"X.{label}" for label in x.labels]
    product = LieAlgebra(field, table, labels=labels)
    logger.debug("Built a %s-dimensional semidirect product", n)
    return product


@dataclass(frozen=True)
class SplitMaps:
    """The canonical maps of B ⋉ X: k: X → A, α: A → B, β: B → A
    """
    k: LinearMap
    alpha: LinearMap
    beta: LinearMap


def canonical_split_maps(b: LieAlgebra, x: LieAlgebra, product: LieAlgebra) -> SplitMaps:
    """Injection of X, projection onto B and the section of B for a semidirect product
    """
    nb, nx = b.dim, x.dim
    if product.dim != nb + nx:
        raise DimensionError(f"Product has dimension {product.dim}, expected {nb + nx}")
    field = b.field
    k = LinearMap.from_images(x, product, [product.basis_vector(nb + j) for j in range(nx)])
    alpha = LinearMap(product, b, ExactMatrix.from_rows(
        field, [[1 if c == r else 0 for c in range(nb + nx)] for r in range(nb)], cols=nb + nx))
    beta = LinearMap.from_images(b, product, [product.basis_vector(i) for i in range(nb)])
    return SplitMaps(k=k, alpha=alpha, beta=beta)


def verify_split_extension(a: LieAlgebra, k: LinearMap, alpha: LinearMap, beta: LinearMap) -> bool:
    """Check that X --k--> A --α--> B with section β is a split extension

    True when α ∘ β = id_B, k is injective and image(k) = kernel(α).

    Raises
    ------
    NotAHomomorphismError
        One of the maps does not preserve brackets
    DimensionError
        The maps do not fit together around A
    """
    if k.codomain.dim != a.dim or alpha.domain.dim != a.dim or beta.codomain.dim != a.dim:
        raise DimensionError("The maps must all meet at A")
    if alpha.codomain.dim != beta.domain.dim:
        raise DimensionError("α must land where β starts")
    statuses = {name: check_hom(f) for name, f in (('k', k), ('alpha', alpha), ('beta', beta))}
    if bad := [name for name, status in statuses.items() if status == HomStatus.NOT_HOM]:
        raise NotAHomomorphismError(f"Not homomorphisms: {bad}")

    if compose(alpha, beta).matrix != identity_map(alpha.codomain).matrix:
        return False
    if statuses['k'] != HomStatus.MONO_HOM:
        return False
    img: Subspace = image(k)
    ker = map_kernel(alpha)
    return subspace_leq(img, ker) and subspace_leq(ker, img)
