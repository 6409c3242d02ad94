"""Finite-dimensional Lie algebras given by structure constants

A Lie algebra over a field F with basis x_0, ..., x_{n-1} is stored as the
full table c[i][j][k] with [x_i, x_j] = sum_k c[i][j][k] x_k.
"""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations

from vwlab.errors import DimensionError, FieldError
from vwlab.exactmath import ExactMatrix, FieldSpec, Scalar, Vector, make_vector, unit_vector, zero_vector


class LieAlgebra:
    """A finite-dimensional algebra given by a full structure-constant table

    The constructor stores whatever table it is given; use ``validate_lie`` to
    check antisymmetry and the Jacobi identity, or ``LieAlgebra.from_brackets``
    to build an antisymmetric table from its i < j entries.

    Parameters
    ----------
    field : FieldSpec
        The ground field
    constants : Sequence[Sequence[Sequence]]
        c[i][j][k] for 0 <= i, j, k < n
    labels : Sequence[str] | None, optional
        Names of the basis vectors; defaults to v1, ..., vn
    realization : Sequence[ExactMatrix] | None, optional
        Matrices realizing the basis, when the algebra sits inside some gl(m)
        with the commutator as bracket

    Raises
    ------
    DimensionError
        The table is not n x n x n, or labels/realization have the wrong length
    """
    __slots__ = ('field', 'dim', 'labels', 'realization', '_constants', '_terms')

    def __init__(self,
                 field: FieldSpec,
                 constants: Sequence[Sequence[Sequence]],
                 labels: Sequence[str] | None = None,
                 realization: Sequence[ExactMatrix] | None = None):
        n = len(constants)
        table = []
        for i, plane in enumerate(constants):
            if len(plane) != n:
                raise DimensionError(f"Structure constants row {i} has {len(plane)} entries, expected {n}")
            table_plane = []
            for j, line in enumerate(plane):
                if len(line) != n:
                    raise DimensionError(f"Structure constants c[{i}][{j}] has {len(line)} entries, expected {n}")
                table_plane.append(make_vector(field, line))
            table.append(tuple(table_plane))

        if labels is None:
            labels = [f"v{k + 1}" for k in range(n)]
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise DimensionError(f"Got {len(labels)} labels for a {n}-dimensional algebra")
        if len(set(labels)) != n:
            raise ValueError(f"Basis labels must be distinct. Labels given: {labels}")

        if realization is not None:
            realization = tuple(realization)
            if len(realization) != n:
                raise DimensionError(f"Got {len(realization)} realizing matrices for a {n}-dimensional algebra")
            for mat in realization:
                if mat.field != field:
                    raise FieldError(f"Realizing matrix over {mat.field}, algebra over {field}")

        self.field = field
        self.dim = n
        self.labels = labels
        self.realization = realization
        self._constants = tuple(table)
        # nonzero (k, c) terms per basis pair, for fast bilinear evaluation
        self._terms = {(i, j): tuple((k, c) for k, c in enumerate(table[i][j]) if c)
                       for i in range(n) for j in range(n) if any(table[i][j])}

    @classmethod
    def from_brackets(cls,
                      field: FieldSpec,
                      dim: int,
                      brackets: Mapping[tuple[int, int], Mapping[int, object] | Sequence],
                      labels: Sequence[str] | None = None,
                      realization: Sequence[ExactMatrix] | None = None) -> "LieAlgebra":
        """Build an antisymmetric table from the brackets [x_i, x_j] with i < j

        Parameters
        ----------
        field : FieldSpec
            The ground field
        dim : int
            Dimension n
        brackets : Mapping[tuple[int, int], Mapping[int, object] | Sequence]
            For each pair (i, j) with i < j, either a mapping k -> coefficient or
            the full coefficient vector of [x_i, x_j]; omitted pairs are zero
        labels : Sequence[str] | None, optional
            Basis labels
        realization : Sequence[ExactMatrix] | None, optional
            Realizing matrices

        Raises
        ------
        ValueError
            A pair does not satisfy i < j
        DimensionError
            An index is out of range
        """
        if dim < 0:
            raise DimensionError(f"Dimension must be non-negative. Dimension given: {dim}")
        table = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionError(f"Bracket index pair ({i}, {j}) out of range for dimension {dim}")
            if i >= j:
                raise ValueError(f"Brackets must be given with i < j. Pair given: ({i}, {j})")
            items = coeffs.items() if isinstance(coeffs, Mapping) else enumerate(coeffs)
            for k, c in items:
                if not 0 <= k < dim:
                    raise DimensionError(f"Coefficient index {k} out of range for dimension {dim}")
                value = c if isinstance(c, Scalar) else Scalar(field, c)
                table[i][j][k] = value
                table[j][i][k] = -value
        return cls(field, table, labels=labels, realization=realization)

    def constant(self, i: int, j: int, k: int) -> Scalar:
        return self._constants[i][j][k]

    def constants(self) -> tuple[tuple[Vector, ...], ...]:
        return self._constants

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.field, self.dim, i)

    def basis_vectors(self) -> list[Vector]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def zero_vector(self) -> Vector:
        return zero_vector(self.field, self.dim)

    def index_of(self, label: str) -> int:
        """Basis index of a label

        Raises
        ------
        KeyError
            No basis vector has that label
        """
        try:
            return self.labels.index(label)
        except ValueError as e:
            raise KeyError(f"No basis vector labelled {label!r}. Labels: {self.labels}") from e

    def vector(self, coefficients: Mapping[str, object] | Sequence) -> Vector:
        """A vector from label -> coefficient pairs, or from a coefficient list
        """
        if isinstance(coefficients, Mapping):
            values = [0] * self.dim
            for label, c in coefficients.items():
                values[self.index_of(label)] = c
            return make_vector(self.field, values)
        return self.coerce_vector(coefficients)

    def coerce_vector(self, v: Sequence) -> Vector:
        """Coerce to a vector of this algebra

        Raises
        ------
        DimensionError
            Wrong length
        FieldError
            Entries from another field
        """
        if len(v) != self.dim:
            raise DimensionError(f"Vector of length {len(v)} given for a {self.dim}-dimensional algebra")
        return make_vector(self.field, v)

    def bracket(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
        """Bilinear extension of the structure constants; no input checking
        """
        out = [self.field.zero] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                terms = self._terms.get((i, j))
                if terms is None:
                    continue
                coeff = ui * vj
                for k, c in terms:
                    out[k] = out[k] + coeff * c
        return tuple(out)

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self._constants[i][j]

    def nonzero_brackets(self) -> list[tuple[int, int, Vector]]:
        """The nonzero [x_i, x_j] with i < j, in index order
        """
        return [(i, j, self._constants[i][j]) for i, j in combinations(range(self.dim), 2)
                if any(self._constants[i][j])]

    def format_vector(self, v: Sequence[Scalar]) -> str:
        """Human form of a vector in terms of the basis labels, e.g. ``-e2`` or ``2*e1 + b``
        """
        pieces = []
        for label, c in zip(self.labels, v):
            if not c:
                continue
            text = str(c)
            if text == '1':
                term = label
            elif text == '-1':
                term = f"-{label}"
            elif '/' in text:
                term = f"({text})*{label}"
            else:
                term = f"{text}*{label}"
            if pieces and term.startswith('-'):
                pieces.append(f"- {term[1:]}")
            elif pieces:
                pieces.append(f"+ {term}")
            else:
                pieces.append(term)
        return ' '.join(pieces) if pieces else '0'

    def bracket_table(self) -> dict[str, str]:
        """Nonzero brackets as ``{"[x,a]": "b", ...}``, keyed in index order
        """
        return {f"[{self.labels[i]},{self.labels[j]}]": self.format_vector(vec)
                for i, j, vec in self.nonzero_brackets()}

    def relabel(self, labels: Sequence[str]) -> "LieAlgebra":
        return LieAlgebra(self.field, self._constants, labels=labels, realization=self.realization)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.field == other.field and self._constants == other._constants

    def __hash__(self) -> int:
        return hash((self.field, self._constants))

    def __repr__(self) -> str:
        return f"LieAlgebra({self.field}, dim={self.dim}, labels={list(self.labels)})"


@dataclass(frozen=True)
class LieValidation:
    """Outcome of ``validate_lie``; truthy exactly when the table is a Lie algebra

    Attributes
    ----------
    is_valid : bool
        True when antisymmetry and the Jacobi identity hold
    kind : str | None
        ``'antisymmetry'`` or ``'jacobi'`` for the first failure found
    triple : tuple[int, int, int] | None
        The first violating index triple
    """
    is_valid: bool
    kind: str | None = None
    triple: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.is_valid

    def describe(self, algebra: LieAlgebra | None = None) -> str:
        if self.is_valid:
            return "valid Lie algebra"
        names = self.triple
        if algebra is not None:
            names = tuple(algebra.labels[t] for t in self.triple)
        return f"{self.kind} fails at basis triple {names}"


def validate_lie(algebra: LieAlgebra) -> LieValidation:
    """Check antisymmetry and the Jacobi identity over all basis triples

    Parameters
    ----------
    algebra : LieAlgebra
        The table to check

    Returns
    -------
    LieValidation
        Truthy when valid; otherwise carries the first violating triple
    """
    n = algebra.dim
    c = algebra.constants()
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if i == j and c[i][i][k]:
                    return LieValidation(False, 'antisymmetry', (i, i, k))
                if c[i][j][k] + c[j][i][k]:
                    return LieValidation(False, 'antisymmetry', (i, j, k))

    basis = algebra.basis_vectors()
    for i, j, k in combinations(range(n), 3):
        xi, xj, xk = basis[i], basis[j], basis[k]
        total = [a + b + d for a, b, d in zip(algebra.bracket(algebra.bracket(xi, xj), xk),
                                              algebra.bracket(algebra.bracket(xj, xk), xi),
                                              algebra.bracket(algebra.bracket(xk, xi), xj))]
        if any(total):
            return LieValidation(False, 'jacobi', (i, j, k))
    return LieValidation(True)


def bracket(algebra: LieAlgebra, u: Sequence, v: Sequence) -> Vector:
    """[u, v] in the algebra

    Raises
    ------
    DimensionError
        A vector has the wrong length
    FieldError
        A vector has entries from another field
    """
    return algebra.bracket(algebra.coerce_vector(u), algebra.coerce_vector(v))
