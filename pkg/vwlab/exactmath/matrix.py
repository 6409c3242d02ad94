"""Dense exact matrices and the row reduction every other module leans on
"""

from collections.abc import Iterable, Sequence
from fractions import Fraction

from vwlab.errors import DimensionError, FieldError
from vwlab.exactmath.field import FieldSpec, Scalar

Vector = tuple[Scalar, ...]


def make_vector(field: FieldSpec, values: Iterable) -> Vector:
    """Coerce an iterable of integers, fractions or scalars into a field vector
    """
    return tuple(field(v) if isinstance(v, Scalar) else Scalar(field, v) for v in values)


def zero_vector(field: FieldSpec, length: int) -> Vector:
    return (field.zero,) * length


def unit_vector(field: FieldSpec, length: int, index: int) -> Vector:
    if not 0 <= index < length:
        raise DimensionError(f"Unit vector index {index} out of range for length {length}")
    return tuple(field.one if k == index else field.zero for k in range(length))


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return not any(v)


def add_vectors(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"Cannot add vectors of lengths {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c: Scalar | int, v: Sequence[Scalar]) -> Vector:
    return tuple(c * a for a in v)


class ExactMatrix:
    """An immutable rows x cols matrix of scalars over a single field

    Parameters
    ----------
    field : FieldSpec
        The field of every entry
    rows : int
        Number of rows
    cols : int
        Number of columns
    entries : Iterable
        Row-major entries; integers and fractions are coerced into ``field``

    Raises
    ------
    DimensionError
        The number of entries is not rows x cols
    FieldError
        An entry is a Scalar of some other field
    """
    __slots__ = ('field', 'rows', 'cols', '_rows')

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries: Iterable):
        if rows < 0 or cols < 0:
            raise DimensionError(f"Matrix shape must be non-negative. Shape given: {rows}x{cols}")
        flat = make_vector(field, entries)
        if len(flat) != rows * cols:
            raise DimensionError(f"A {rows}x{cols} matrix needs {rows * cols} entries. Count given: {len(flat)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._rows = tuple(flat[r * cols:(r + 1) * cols] for r in range(rows))

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> "ExactMatrix":
        """Build a matrix from a list of rows

        Parameters
        ----------
        field : FieldSpec
            The field of the entries
        rows : Sequence[Sequence]
            The rows; all must have the same length
        cols : int | None, optional
            Column count, needed only when ``rows`` is empty

        Raises
        ------
        DimensionError
            The rows are ragged
        """
        rows = list(rows)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for ii, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError(f"Row {ii} has length {len(row)}, expected {cols}")
        return cls(field, len(rows), cols, [v for row in rows for v in row])

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "ExactMatrix":
        return cls(field, rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        return cls(field, n, n, [1 if r == c else 0 for r in range(n) for c in range(n)])

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int | None = None) -> "ExactMatrix":
        columns = list(columns)
        return cls.from_rows(field, columns, cols=rows).transpose()

    def row(self, r: int) -> Vector:
        return self._rows[r]

    def column(self, c: int) -> Vector:
        return tuple(row[c] for row in self._rows)

    def row_vectors(self) -> tuple[Vector, ...]:
        return self._rows

    def column_vectors(self) -> tuple[Vector, ...]:
        return tuple(self.column(c) for c in range(self.cols))

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        r, c = index
        return self._rows[r][c]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entries(self) -> Vector:
        """Row-major entries
        """
        return tuple(v for row in self._rows for v in row)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.field, self.cols, self.rows,
                           [self._rows[r][c] for c in range(self.cols) for r in range(self.rows)])

    def _check_same_field(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise FieldError(f"Field mismatch: {self.field} and {other.field}")

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        """Matrix product self @ other
        """
        self._check_same_field(other)
        if self.cols != other.rows:
            raise DimensionError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.field.zero
        other_cols = other.column_vectors()
        entries = []
        for row in self._rows:
            for col in other_cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                entries.append(acc)
        return ExactMatrix(self.field, self.rows, other.cols, entries)

    __matmul__ = matmul

    def matvec(self, v: Sequence[Scalar]) -> Vector:
        """Apply the matrix to a column vector
        """
        if len(v) != self.cols:
            raise DimensionError(f"Vector of length {len(v)} cannot multiply a {self.rows}x{self.cols} matrix")
        zero = self.field.zero
        out = []
        for row in self._rows:
            acc = zero
            for a, b in zip(row, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"Cannot add {self.shape} and {other.shape} matrices")
        return ExactMatrix(self.field, self.rows, self.cols,
                           [a + b for a, b in zip(self.entries(), other.entries())])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def __neg__(self) -> "ExactMatrix":
        return self.scale(-1)

    def scale(self, c: Scalar | int | Fraction) -> "ExactMatrix":
        return ExactMatrix(self.field, self.rows, self.cols, [c * a for a in self.entries()])

    def vstack(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_field(other)
        if self.cols != other.cols:
            raise DimensionError(f"Cannot stack {self.cols}-column and {other.cols}-column matrices")
        return ExactMatrix.from_rows(self.field, self._rows + other._rows, cols=self.cols)

    def hstack(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_field(other)
        if self.rows != other.rows:
            raise DimensionError(f"Cannot place a {other.rows}-row matrix beside a {self.rows}-row matrix")
        return ExactMatrix.from_rows(self.field, [a + b for a, b in zip(self._rows, other._rows)],
                                     cols=self.cols + other.cols)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._rows)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def determinant(self) -> Scalar:
        """Determinant by exact elimination

        Raises
        ------
        DimensionError
            The matrix is not square
        """
        if not self.is_square():
            raise DimensionError(f"Determinant needs a square matrix. Shape given: {self.shape}")
        work = [list(row) for row in self._rows]
        det = self.field.one
        n = self.rows
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col]), None)
            if pivot is None:
                return self.field.zero
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det = det * work[col][col]
            inv = work[col][col].inverse()
            for r in range(col + 1, n):
                factor = work[r][col] * inv
                if factor:
                    work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return det

    def inverse(self) -> "ExactMatrix":
        """Inverse by row reduction of [M | I]

        Raises
        ------
        DimensionError
            The matrix is not square
        ValueError
            The matrix is singular
        """
        if not self.is_square():
            raise DimensionError(f"Inverse needs a square matrix. Shape given: {self.shape}")
        n = self.rows
        if len(pivot_columns(self)) < n:
            raise ValueError("Matrix is singular and has no inverse")
        reduced, _ = rref(self.hstack(ExactMatrix.identity(self.field, n)))
        return ExactMatrix.from_rows(self.field, [row[n:] for row in reduced.row_vectors()], cols=n)

    def to_json(self) -> list[list[str]]:
        """Matrix as nested lists of scalar strings
        """
        return [[str(v) for v in row] for row in self._rows]

    @classmethod
    def from_json(cls, field: FieldSpec, data: Sequence[Sequence]) -> "ExactMatrix":
        """Read nested lists of scalar strings (or integers)
        """
        return cls.from_rows(field, [[field.parse_scalar(v) for v in row] for row in data])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self._rows))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.field}, {self.to_json()})"


def reduce_rows(field: FieldSpec, rows: list[list[Scalar]], cols: int) -> tuple[list[list[Scalar]], list[int]]:
    """Gauss-Jordan elimination in place; pivots are chosen as the first
    nonzero entry in column order

    Returns the reduced rows (zero rows last) and the pivot columns.
    """
    pivots = []
    pivot_row = 0
    n_rows = len(rows)
    for col in range(cols):
        if pivot_row == n_rows:
            break
        found = next((r for r in range(pivot_row, n_rows) if rows[r][col]), None)
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [a * inv for a in rows[pivot_row]]
        for r in range(n_rows):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return rows, pivots


def rref(m: ExactMatrix) -> tuple[ExactMatrix, int]:
    """Reduced row-echelon form

    Parameters
    ----------
    m : ExactMatrix
        Any matrix

    Returns
    -------
    tuple[ExactMatrix, int]
        The unique RREF of m (same shape, zero rows at the bottom) and its rank
    """
    rows, pivots = reduce_rows(m.field, [list(row) for row in m.row_vectors()], m.cols)
    return ExactMatrix.from_rows(m.field, rows, cols=m.cols), len(pivots)


def rank(m: ExactMatrix) -> int:
    return rref(m)[1]


def pivot_columns(m: ExactMatrix) -> list[int]:
    """Pivot columns of the RREF of m
    """
    return reduce_rows(m.field, [list(row) for row in m.row_vectors()], m.cols)[1]


def kernel_basis(m: ExactMatrix) -> list[Vector]:
    """Basis of {v : m v = 0}, one vector per free column, in column order
    """
    rows, pivots = reduce_rows(m.field, [list(row) for row in m.row_vectors()], m.cols)
    field = m.field
    pivot_set = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = [field.zero] * m.cols
        v[free] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][free]
        basis.append(tuple(v))
    return basis


def kernel(m: ExactMatrix):
    """Null space of m as a subspace of F^cols

    Returns
    -------
    Subspace
        {v : m v = 0}; its dimension is cols - rank(m)
    """
    # local import: subspace builds on this module
    from vwlab.exactmath.subspace import Subspace
    return Subspace.span(m.field, m.cols, kernel_basis(m))


def solve(m: ExactMatrix, rhs: Sequence[Scalar]) -> Vector | None:
    """A particular solution of m x = rhs

    Parameters
    ----------
    m : ExactMatrix
        Coefficient matrix
    rhs : Sequence[Scalar]
        Right-hand side, of length m.rows

    Returns
    -------
    Vector | None
        One solution (free variables set to zero), or None when inconsistent
    """
    if len(rhs) != m.rows:
        raise DimensionError(f"Right-hand side of length {len(rhs)} does not match {m.rows} rows")
    field = m.field
    augmented = [list(row) + [field(b) if isinstance(b, Scalar) else Scalar(field, b)]
                 for row, b in zip(m.row_vectors(), rhs)]
    rows, pivots = reduce_rows(field, augmented, m.cols + 1)
    if m.cols in pivots:
        return None
    x = [field.zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)
