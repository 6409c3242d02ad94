#!/usr/bin/env python3

"""Test exact matrices, row reduction and kernels
"""

from fractions import Fraction
from unittest import TestCase, main

from hypothesis import given, settings, strategies as st

from vwlab.errors import DimensionError
from vwlab.exactmath import ExactMatrix, FieldSpec, kernel, kernel_basis, rank, rref, solve

GF5 = FieldSpec.prime(5)
Q = FieldSpec.rationals()


def matrices(field, max_rows=4, max_cols=4, bound=4):
    """Strategy for small matrices with entries in [-bound, bound]
    """
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.integers(-bound, bound), min_size=r * c, max_size=r * c).map(
            lambda entries: ExactMatrix(field, r, c, entries))))


class TestExactMatrix(TestCase):
    """Test construction and arithmetic
    """
    def test_shapes(self):
        """Ragged rows and wrong entry counts are refused
        """
        with self.assertRaises(DimensionError):
            ExactMatrix(Q, 2, 2, [1, 2, 3])
        with self.assertRaises(DimensionError):
            ExactMatrix.from_rows(Q, [[1, 2], [3]])
        m = ExactMatrix.from_rows(Q, [[1, 2, 3], [4, 5, 6]])
        self.assertEqual(m.shape, (2, 3))
        self.assertEqual(m.transpose().shape, (3, 2))
        self.assertEqual(m.column(2), (Q(3), Q(6)))

    def test_matmul(self):
        """Products, including the rectangular case
        """
        a = ExactMatrix.from_rows(Q, [[1, 2], [3, 4]])
        b = ExactMatrix.from_rows(Q, [[0, 1], [1, 0]])
        self.assertEqual(a @ b, ExactMatrix.from_rows(Q, [[2, 1], [4, 3]]))
        self.assertEqual(a.matvec([1, 1]), (Q(3), Q(7)))
        with self.assertRaises(DimensionError):
            a @ ExactMatrix.zeros(Q, 3, 1)

    def test_inverse_and_determinant(self):
        """Inverse over Q and GF(5), and a singular matrix
        """
        a = ExactMatrix.from_rows(Q, [[1, 2], [3, 4]])
        self.assertEqual(a.determinant(), Q(-2))
        self.assertEqual(a @ a.inverse(), ExactMatrix.identity(Q, 2))
        self.assertEqual(a.inverse()[1, 0], Q(Fraction(3, 2)))

        b = ExactMatrix.from_rows(GF5, [[2, 1], [1, 1]])
        self.assertEqual(b.inverse(), ExactMatrix.from_rows(GF5, [[1, -1], [-1, 2]]))

        singular = ExactMatrix.from_rows(GF5, [[1, 2], [2, 4]])
        self.assertEqual(singular.determinant(), GF5.zero)
        with self.assertRaises(ValueError):
            singular.inverse()

    def test_json(self):
        """Entries are written as scalar strings
        """
        m = ExactMatrix.from_rows(Q, [[Fraction(1, 2), -1]])
        self.assertEqual(m.to_json(), [["1/2", "-1"]])
        self.assertEqual(ExactMatrix.from_json(Q, m.to_json()), m)


class TestRowReduction(TestCase):
    """Test rref, rank, kernel and solve
    """
    def test_rref(self):
        """A known reduction over Q
        """
        m = ExactMatrix.from_rows(Q, [[0, 2, 4], [1, 1, 1], [1, 2, 3]])
        reduced, r = rref(m)
        self.assertEqual(r, 2)
        self.assertEqual(reduced, ExactMatrix.from_rows(Q, [[1, 0, -1], [0, 1, 2], [0, 0, 0]]))

    def test_rank_depends_on_field(self):
        """[[1, 2], [3, 1]] is singular only in characteristic 5
        """
        rows = [[1, 2], [3, 1]]
        self.assertEqual(rank(ExactMatrix.from_rows(Q, rows)), 2)
        self.assertEqual(rank(ExactMatrix.from_rows(GF5, rows)), 1)

    def test_kernel(self):
        """The null space of a rank-one map
        """
        m = ExactMatrix.from_rows(Q, [[1, 1, 1]])
        k = kernel(m)
        self.assertEqual(k.dim, 2)
        self.assertIn((Q(1), Q(-1), Q(0)), k)

    def test_solve(self):
        """Consistent and inconsistent systems
        """
        m = ExactMatrix.from_rows(Q, [[1, 1], [1, -1]])
        self.assertEqual(solve(m, [2, 0]), (Q(1), Q(1)))
        self.assertIsNone(solve(ExactMatrix.from_rows(Q, [[1, 1], [2, 2]]), [1, 3]))
        with self.assertRaises(DimensionError):
            solve(m, [1])

    @settings(max_examples=60)
    @given(matrices(GF5))
    def test_rank_nullity(self, m):
        """rank + nullity equals the number of columns, and kernel vectors are killed
        """
        basis = kernel_basis(m)
        self.assertEqual(rank(m) + len(basis), m.cols)
        for v in basis:
            self.assertFalse(any(m.matvec(v)))

    @settings(max_examples=60)
    @given(matrices(Q))
    def test_rref_is_idempotent(self, m):
        """Reducing a reduced matrix changes nothing
        """
        reduced, r = rref(m)
        self.assertEqual(rref(reduced), (reduced, r))
        self.assertEqual(rank(m.transpose()), r)


if __name__ == "__main__":
    main()
