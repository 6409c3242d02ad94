"""Structure-constant tables of the standard algebras: abelian, Heisenberg, gl(n), sl(2)
"""

from enum import StrEnum
import re

from vwlab.errors import CharacteristicError
from vwlab.exactmath import ExactMatrix, FieldSpec
from vwlab.lie.algebra import LieAlgebra

_NAME_PATTERN = re.compile(r"^\s*(?P<name>[a-z0-9]+)\s*(?:\(\s*(?P<arg>[a-z0-9]+)\s*\))?\s*$")


class HeisenbergVariant(StrEnum):
    """The two presentations of the 3-dimensional Heisenberg algebra

    XAB has basis (x, a, b) with [x, a] = b; YAB has basis (y, a, b) with [y, b] = a.
    """
    XAB = 'xab'
    YAB = 'yab'


def unit_matrix(field: FieldSpec, n: int, i: int, j: int) -> ExactMatrix:
    """e_ij: the n x n matrix with 1 at (i, j), 1-based, and 0 elsewhere
    """
    return ExactMatrix(field, n, n, [1 if (r, c) == (i - 1, j - 1) else 0 for r in range(n) for c in range(n)])


def gl_index(n: int, i: int, j: int) -> int:
    """Flat basis index of e_ij in gl(n): n(i-1) + (j-1), with 1-based i, j
    """
    return n * (i - 1) + (j - 1)


def abelian(n: int, field: FieldSpec, labels: list[str] | None = None) -> LieAlgebra:
    """The n-dimensional abelian algebra, basis e1, ..., en by default
    """
    if labels is None:
        labels = [f"e{k + 1}" for k in range(n)]
    return LieAlgebra.from_brackets(field, n, {}, labels=labels)


def heisenberg3(field: FieldSpec, variant: HeisenbergVariant | str = HeisenbergVariant.XAB) -> LieAlgebra:
    """The 3-dimensional Heisenberg algebra in one of its two presentations
    """
    variant = HeisenbergVariant(variant)
    if variant == HeisenbergVariant.XAB:
        return LieAlgebra.from_brackets(field, 3, {(0, 1): {2: 1}}, labels=['x', 'a', 'b'])
    return LieAlgebra.from_brackets(field, 3, {(0, 2): {1: 1}}, labels=['y', 'a', 'b'])


def gl(n: int, field: FieldSpec) -> LieAlgebra:
    """gl(n, F) on the basis e_ij in row-major order, with its matrix realization

    [e_ij, e_kl] = d_jk e_il - d_li e_kj
    """
    def name(i, j):
        return f"e{i}{j}" if n < 10 else f"e{i}_{j}"

    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    brackets = {}
    for a, (i, j) in enumerate(pairs):
        for b, (k, l) in enumerate(pairs):
            if a >= b:
                continue
            coeffs = {}
            if j == k:
                coeffs[gl_index(n, i, l)] = coeffs.get(gl_index(n, i, l), 0) + 1
            if l == i:
                coeffs[gl_index(n, k, j)] = coeffs.get(gl_index(n, k, j), 0) - 1
            if any(coeffs.values()):
                brackets[(a, b)] = coeffs
    return LieAlgebra.from_brackets(field, n * n, brackets,
                                    labels=[name(i, j) for i, j in pairs],
                                    realization=[unit_matrix(field, n, i, j) for i, j in pairs])


def sl2(field: FieldSpec) -> LieAlgebra:
    """sl(2, F) on the basis (e, h, f): [h, e] = 2e, [h, f] = -2f, [e, f] = h

    Raises
    ------
    CharacteristicError
        The field has characteristic 2, where sl(2) is not simple
    """
    if field.characteristic == 2:
        raise CharacteristicError("sl(2, F) is not simple in characteristic 2 and is not built there")
    e = unit_matrix(field, 2, 1, 2)
    f = unit_matrix(field, 2, 2, 1)
    h = unit_matrix(field, 2, 1, 1) - unit_matrix(field, 2, 2, 2)
    return LieAlgebra.from_brackets(field, 3,
                                    {(0, 1): {0: -2}, (0, 2): {1: 1}, (1, 2): {2: -2}},
                                    labels=['e', 'h', 'f'],
                                    realization=[e, h, f])


def standard_algebra(name: str, field: FieldSpec) -> LieAlgebra:
    """Build a standard algebra from its name

    Accepted names: ``abelian(n)``, ``heisenberg3``, ``heisenberg3(xab)``,
    ``heisenberg3(yab)``, ``gl(n)``, ``sl2``.

    Raises
    ------
    ValueError
        The name is not recognized
    CharacteristicError
        ``sl2`` was requested in characteristic 2
    """
    match = _NAME_PATTERN.match(name.lower()) if isinstance(name, str) else None
    if match is None:
        raise ValueError(f"Unrecognized algebra name {name!r}")
    base, arg = match.group('name'), match.group('arg')
    if base == 'abelian' and arg is not None and arg.isdigit():
        return abelian(int(arg), field)
    if base == 'gl' and arg is not None and arg.isdigit():
        return gl(int(arg), field)
    if base == 'heisenberg3':
        return heisenberg3(field, arg or HeisenbergVariant.XAB)
    if base == 'sl2' and arg is None:
        return sl2(field)
    raise ValueError(f"Unrecognized algebra name {name!r}")
