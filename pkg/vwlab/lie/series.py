"""Lower central and derived series of Lie algebras

Indexing follows L^0 = L, L^k = [L, L^(k-1)] and L^(0) = L,
L^(n) = [L^(n-1), L^(n-1)]. An algebra is k-nilpotent when L^(k-1) != 0 and
L^k = 0, so a nonzero abelian algebra is 1-nilpotent; n-solvable is defined
the same way on the derived series.
"""

from dataclasses import dataclass
from enum import StrEnum
from logging import getLogger

from vwlab.errors import NotALieAlgebraError
from vwlab.exactmath import Subspace
from vwlab.lie.algebra import LieAlgebra, validate_lie
from vwlab.lie.subspaces import full_subspace, product_subspace

logger = getLogger(__name__)


class SeriesKind(StrEnum):
    LOWER_CENTRAL = 'lower-central'
    DERIVED = 'derived'


@dataclass(frozen=True)
class SeriesReport:
    """Terms of a series up to stabilization

    Attributes
    ----------
    kind : SeriesKind
        Which series
    terms : tuple[Subspace, ...]
        L^0, L^1, ... until a term repeats; the repeat is not listed
    class_index : int | None
        Index of the first zero term (nilpotency class or derived length), or
        None if the series stabilizes at a nonzero term
    """
    kind: SeriesKind
    terms: tuple[Subspace, ...]
    class_index: int | None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    @property
    def terminates(self) -> bool:
        return self.class_index is not None

    @property
    def class_label(self) -> int | str:
        """The class, or ``not-nilpotent`` / ``not-solvable``
        """
        if self.class_index is not None:
            return self.class_index
        return 'not-nilpotent' if self.kind == SeriesKind.LOWER_CENTRAL else 'not-solvable'


def _require_lie(algebra: LieAlgebra):
    check = validate_lie(algebra)
    if not check:
        raise NotALieAlgebraError(f"Not a Lie algebra: {check.describe(algebra)}")


def _series(algebra: LieAlgebra, kind: SeriesKind) -> SeriesReport:
    _require_lie(algebra)
    whole = full_subspace(algebra)
    terms = [whole]
    current = whole
    while not current.is_zero():
        left = whole if kind == SeriesKind.LOWER_CENTRAL else current
        following = product_subspace(algebra, left, current)
        if following == current:
            logger.debug("%s series stabilized at dimension %s", kind, current.dim)
            return SeriesReport(kind, tuple(terms), None)
        terms.append(following)
        current = following
    return SeriesReport(kind, tuple(terms), len(terms) - 1)


def lower_central_series(algebra: LieAlgebra) -> SeriesReport:
    """L^0 = L, L^k = [L, L^(k-1)] until stabilization

    Raises
    ------
    NotALieAlgebraError
        The table fails antisymmetry or Jacobi
    """
    return _series(algebra, SeriesKind.LOWER_CENTRAL)


def derived_series(algebra: LieAlgebra) -> SeriesReport:
    """L^(0) = L, L^(n) = [L^(n-1), L^(n-1)] until stabilization

    Raises
    ------
    NotALieAlgebraError
        The table fails antisymmetry or Jacobi
    """
    return _series(algebra, SeriesKind.DERIVED)


def is_k_nilpotent(algebra: LieAlgebra, k: int) -> bool:
    """Membership in Nil_k(Lie): s-nilpotent for some s <= k
    """
    report = lower_central_series(algebra)
    return report.class_index is not None and report.class_index <= k


def is_n_solvable(algebra: LieAlgebra, n: int) -> bool:
    """Membership in Sol_n(Lie): t-solvable for some t <= n
    """
    report = derived_series(algebra)
    return report.class_index is not None and report.class_index <= n


def format_subspace(algebra: LieAlgebra, s: Subspace) -> str:
    """``span{b, e1, e2}`` in terms of the algebra's labels
    """
    return "span{" + ", ".join(algebra.format_vector(v) for v in s.vectors()) + "}"


def format_series(algebra: LieAlgebra, report: SeriesReport) -> list[str]:
    """One line per term, e.g. ``L^1 = span{b, e1, e2}``
    """
    lines = []
    for k, term in enumerate(report.terms):
        name = f"L^{k}" if report.kind == SeriesKind.LOWER_CENTRAL else f"L^({k})"
        body = "0" if term.is_zero() else format_subspace(algebra, term)
        lines.append(f"{name} = {body}")
    return lines
