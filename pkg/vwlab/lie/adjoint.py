"""The adjoint action of a subalgebra on one of its ideals

For a subalgebra P of L and an ideal U of P, every p in P gives the linear
map ad_p = [p, -] on U. Matrices are written in the RREF basis of U, column j
holding the coordinates of [p, u_j].
"""

from collections.abc import Sequence

from vwlab.errors import NotAnIdealError, NotASubalgebraError
from vwlab.exactmath import ExactMatrix, Subspace
from vwlab.lie.algebra import LieAlgebra
from vwlab.lie.maps import LinearMap, image
from vwlab.lie.standard import gl
from vwlab.lie.subspaces import is_ideal_of, is_subalgebra, subalgebra_as_algebra


def adjoint_matrix(algebra: LieAlgebra, p: Sequence, u: Subspace) -> ExactMatrix:
    """Matrix of [p, -] restricted to U, in U's RREF basis

    Raises
    ------
    NotAnIdealError
        [p, U] is not contained in U
    """
    p = algebra.coerce_vector(p)
    columns = []
    for vec in u.vectors():
        w = algebra.bracket(p, vec)
        if not u.contains(w):
            raise NotAnIdealError("[p, U] leaves U")
        columns.append(u.coordinates(w))
    return ExactMatrix.from_columns(algebra.field, columns, rows=u.dim)


def adjoint_on_ideal(algebra: LieAlgebra, p: Subspace, u: Subspace) -> tuple[LinearMap, Subspace]:
    """ad: P → gl(U), p ↦ [p, -]|_U

    Parameters
    ----------
    algebra : LieAlgebra
        The ambient algebra L
    p : Subspace
        A subalgebra P of L
    u : Subspace
        An ideal U of P

    Returns
    -------
    tuple[LinearMap, Subspace]
        The map from the algebra induced on P (RREF basis of P) into
        gl(dim U) on its e_ij basis, and its image inside gl(dim U)

    Raises
    ------
    NotASubalgebraError
        P is not closed under the bracket
    NotAnIdealError
        U is not an ideal of P
    """
    if not is_subalgebra(algebra, p):
        raise NotASubalgebraError("P is not closed under the bracket")
    if not is_ideal_of(algebra, p, u):
        raise NotAnIdealError("U is not an ideal of P")
    domain = subalgebra_as_algebra(algebra, p)
    target = gl(u.dim, algebra.field)
    images = [adjoint_matrix(algebra, vec, u).entries() for vec in p.vectors()]
    ad = LinearMap.from_images(domain, target, images)
    return ad, image(ad)
