"""Commutators, normal closures and commutator subgroups
"""

from collections.abc import Iterable, Sequence
from enum import StrEnum
from logging import getLogger

import numpy as np

from vwlab.config import DEFAULT_ENUMERATION_CAP
from vwlab.group.matrix_group import (ElementSet, MatrixGroup, batch_inverses, closure, element_key, enumerate_group,
                                      generate, matrix_inverse, multiply, require_members)

logger = getLogger(__name__)


class Convention(StrEnum):
    """Which side the inverses go on in [g, h]
    """
    INVERSE_FIRST = 'inverse-first'  # g^-1 h^-1 g h
    INVERSE_LAST = 'inverse-last'  # g h g^-1 h^-1


def commutator(g: np.ndarray, h: np.ndarray, p: int, convention: Convention | str = Convention.INVERSE_FIRST) -> np.ndarray:
    g_inv, h_inv = matrix_inverse(g, p), matrix_inverse(h, p)
    if Convention(convention) == Convention.INVERSE_FIRST:
        return multiply(g_inv, h_inv, g, h, p=p)
    return multiply(g, h, g_inv, h_inv, p=p)


def normal_closure(p: int,
                   n: int,
                   seeds: Iterable[np.ndarray],
                   conjugators: Sequence[np.ndarray],
                   cap: int = DEFAULT_ENUMERATION_CAP) -> ElementSet:
    """Smallest subgroup containing the seeds and normalized by the conjugators

    Conjugates of the current generators are added until none is new.
    """
    current = generate(p, n, seeds, cap=cap)
    inverses = [matrix_inverse(c, p) for c in conjugators]
    while True:
        fresh = [multiply(c_inv, h, c, p=p)
                 for c, c_inv in zip(conjugators, inverses)
                 for h in current.generators]
        fresh = [g for g in fresh if g not in current]
        if not fresh:
            return current
        current = generate(p, n, [*current.generators, *fresh], cap=cap)


def commutator_closure(p: int,
                       n: int,
                       left: Sequence[np.ndarray],
                       right: Sequence[np.ndarray],
                       cap: int = DEFAULT_ENUMERATION_CAP) -> ElementSet:
    """[<left>, <right>] as the normal closure of generator commutators in <left, right>

    Commutators are always taken with the inverse-first convention; the
    subgroup does not depend on the convention.
    """
    seeds = {}
    for g in left:
        for h in right:
            c = commutator(g, h, p)
            seeds.setdefault(element_key(c), c)
    keys = {}
    for g in [*left, *right]:
        keys.setdefault(element_key(g), g)
    return normal_closure(p, n, seeds.values(), list(keys.values()), cap=cap)


def commutator_subgroup(group: MatrixGroup,
                        h_generators: Sequence[np.ndarray],
                        ambient: ElementSet | None = None,
                        cap: int = DEFAULT_ENUMERATION_CAP) -> ElementSet:
    """The subgroup [G, H] for H generated by elements of G

    Parameters
    ----------
    group : MatrixGroup
        G
    h_generators : Sequence[np.ndarray]
        Generators of H; each must lie in G
    ambient : ElementSet | None, optional
        The enumeration of G, computed if not given
    cap : int, optional
        Enumeration cap

    Raises
    ------
    NotInGroupError
        An H-generator is not an element of G
    EnumerationCapError
        G has more than ``cap`` elements
    """
    ambient = enumerate_group(group, cap=cap) if ambient is None else ambient
    h_generators = [np.asarray(h, dtype=np.int64) % group.p for h in h_generators]
    require_members(ambient, h_generators)
    result = commutator_closure(group.p, group.n, list(group.matrices), h_generators, cap=cap)
    logger.debug("[G, H] with %s H-generators has order %s", len(h_generators), result.order)
    return result


def brute_force_commutator_subgroup(left: ElementSet, right: ElementSet, cap: int = DEFAULT_ENUMERATION_CAP) -> ElementSet:
    """[H, K] from the commutators of every element pair, then closure

    Quadratic in the orders; meant for cross-checking small groups.
    """
    p, n = left.p, left.n
    hs = right.elements
    h_invs = batch_inverses(hs, p)
    seeds = {}
    for g, g_inv in zip(left.elements, batch_inverses(left.elements, p)):
        cs = np.matmul(np.matmul(np.matmul(g_inv, h_invs) % p, g) % p, hs) % p
        for c in cs:
            seeds.setdefault(element_key(c), c)
    return closure(p, n, list(seeds.values()), cap=cap)
