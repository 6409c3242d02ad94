"""Lower central and derived series of enumerated matrix groups

Indices match the Lie side: gamma_0 = G, gamma_k = [G, gamma_(k-1)], and G
is k-nilpotent when gamma_(k-1) is nontrivial and gamma_k is trivial.
"""

from dataclasses import dataclass
from logging import getLogger

from vwlab.config import DEFAULT_ENUMERATION_CAP
from vwlab.group.commutators import commutator_closure
from vwlab.group.matrix_group import ElementSet, MatrixGroup, enumerate_group
from vwlab.lie.series import SeriesKind

logger = getLogger(__name__)


@dataclass(frozen=True)
class GroupSeriesReport:
    """Terms of a group series up to stabilization

    Attributes
    ----------
    kind : SeriesKind
        Which series
    terms : tuple[ElementSet, ...]
        Terms until one repeats; the repeat is not listed
    class_index : int | None
        Index of the first trivial term, or None if the series stabilizes at a
        nontrivial subgroup
    """
    kind: SeriesKind
    terms: tuple[ElementSet, ...]
    class_index: int | None

    @property
    def orders(self) -> list[int]:
        return [t.order for t in self.terms]

    @property
    def terminates(self) -> bool:
        return self.class_index is not None

    @property
    def class_label(self) -> int | str:
        if self.class_index is not None:
            return self.class_index
        return 'not-nilpotent' if self.kind == SeriesKind.LOWER_CENTRAL else 'not-solvable'


def _series(group: MatrixGroup,
            kind: SeriesKind,
            elements: ElementSet | None,
            cap: int,
            progress: bool) -> GroupSeriesReport:
    whole = enumerate_group(group, cap=cap, progress=progress) if elements is None else elements
    terms = [whole]
    current = whole
    while not current.is_trivial():
        left = group.matrices if kind == SeriesKind.LOWER_CENTRAL else current.generators
        following = commutator_closure(group.p, group.n, list(left), list(current.generators), cap=cap)
        # following <= current, so equal orders mean equal subgroups
        if following.order == current.order:
            logger.debug("%s series stabilized at order %s", kind, current.order)
            return GroupSeriesReport(kind, tuple(terms), None)
        terms.append(following)
        current = following
    return GroupSeriesReport(kind, tuple(terms), len(terms) - 1)


def lower_central_series_grp(group: MatrixGroup,
                             elements: ElementSet | None = None,
                             cap: int = DEFAULT_ENUMERATION_CAP,
                             progress: bool = False) -> GroupSeriesReport:
    """gamma_0 = G, gamma_k = [G, gamma_(k-1)] until stabilization

    Parameters
    ----------
    group : MatrixGroup
        G
    elements : ElementSet | None, optional
        The enumeration of G, if already known
    cap : int, optional
        Enumeration cap
    progress : bool, optional
        Show a progress bar while enumerating G

    Raises
    ------
    EnumerationCapError
        G or a term has more than ``cap`` elements
    """
    return _series(group, SeriesKind.LOWER_CENTRAL, elements, cap, progress)


def derived_series_grp(group: MatrixGroup,
                       elements: ElementSet | None = None,
                       cap: int = DEFAULT_ENUMERATION_CAP,
                       progress: bool = False) -> GroupSeriesReport:
    """G^(0) = G, G^(n) = [G^(n-1), G^(n-1)] until stabilization
    """
    return _series(group, SeriesKind.DERIVED, elements, cap, progress)


def is_k_nilpotent_grp(group: MatrixGroup, k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    report = lower_central_series_grp(group, cap=cap)
    return report.class_index is not None and report.class_index <= k


def is_n_solvable_grp(group: MatrixGroup, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    report = derived_series_grp(group, cap=cap)
    return report.class_index is not None and report.class_index <= n
