"""G ⋉ Z_p^n realized inside GL(n+1, p)

The pair (g, x) is the block matrix [[g, x], [0, 1]], so block products give
(g, x)(g', x') = (gg', x + g x').
"""

import numpy as np

from vwlab.group.matrix_group import MatrixGroup


def block_element(g: np.ndarray, x, p: int) -> np.ndarray:
    """The block matrix of the pair (g, x)
    """
    g = np.asarray(g, dtype=np.int64)
    n = g.shape[0]
    out = np.eye(n + 1, dtype=np.int64)
    out[:n, :n] = g % p
    out[:n, n] = np.asarray(x, dtype=np.int64) % p
    return out


def split_block(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of ``block_element``: the pair (g, x)
    """
    n = m.shape[0] - 1
    return m[:n, :n].copy(), m[:n, n].copy()


def translation(n: int, i: int, p: int) -> np.ndarray:
    """The pair (I, e_i), i 0-based
    """
    x = np.zeros(n, dtype=np.int64)
    x[i] = 1
    return block_element(np.eye(n, dtype=np.int64), x, p)


def vector_semidirect(group: MatrixGroup, translation_labels: list[str] | None = None) -> MatrixGroup:
    """G ⋉ Z_p^n with G acting by matrix multiplication

    Generators are (g, 0) for each generator of G, under its label, then
    the translations (I, e_i), labeled t1, ..., tn unless labels are given.
    """
    n, p = group.n, group.p
    labels = translation_labels or [f"t{i + 1}" for i in range(n)]
    if len(labels) != n:
        raise ValueError(f"Expected {n} translation labels, got {labels}")
    if clash := set(labels) & set(group.labels):
        raise ValueError(f"Translation labels {sorted(clash)} collide with generator labels")
    zero = np.zeros(n, dtype=np.int64)
    generators = {label: block_element(g, zero, p) for label, g in zip(group.labels, group.matrices)}
    generators.update({label: translation(n, i, p) for i, label in enumerate(labels)})
    return MatrixGroup(p, n + 1, generators)
