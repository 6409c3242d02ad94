#!/usr/bin/env python3

"""Test bracket products of subspaces, generated subalgebras and ideals, and
the lower central and derived series
"""

from itertools import product
from unittest import TestCase, main

from hypothesis import HealthCheck, assume, given, settings, strategies as st

from vwlab.errors import NotALieAlgebraError, NotASubalgebraError
from vwlab.exactmath import ExactMatrix, FieldSpec, Subspace, subspace_leq, subspace_span
from vwlab.lie import (LieAlgebra, SeriesKind, abelian, derived_series, format_series, full_subspace, gl,
                       heisenberg3, ideal_generated, is_ideal, is_ideal_of, is_k_nilpotent, is_n_solvable,
                       is_subalgebra, lower_central_series, product_subspace, sl2, span_in,
                       subalgebra_as_algebra, subalgebra_generated, validate_lie)

Q = FieldSpec.rationals()
GF5 = FieldSpec.prime(5)
SLOW_DRAWS = [HealthCheck.filter_too_much, HealthCheck.too_slow]

residues = st.integers(0, 4)


@st.composite
def small_lie_algebras(draw):
    """Lie algebras of dimension 1 to 3 over GF(5)

    The abelian line; a 2-dimensional [e1, e2] = a e1 + b e2; F ⋉_A F^2 for a
    random 2x2 matrix A; sl(2) after a random change of basis; or a random
    3-dimensional table that passes ``validate_lie``.
    """
    family = draw(st.sampled_from(['line', 'plane', 'split', 'sl2', 'table']))
    if family == 'line':
        return abelian(1, GF5)
    if family == 'plane':
        a, b = draw(residues), draw(residues)
        return LieAlgebra.from_brackets(GF5, 2, {(0, 1): {0: a, 1: b}})
    if family == 'split':
        a = draw(st.lists(residues, min_size=4, max_size=4))
        return LieAlgebra.from_brackets(GF5, 3, {(0, 1): {1: a[0], 2: a[2]}, (0, 2): {1: a[1], 2: a[3]}},
                                        labels=['t', 'e1', 'e2'])
    if family == 'sl2':
        entries = draw(st.lists(residues, min_size=9, max_size=9).filter(
            lambda m: ExactMatrix(GF5, 3, 3, m).determinant() != 0))
        change = ExactMatrix(GF5, 3, 3, entries)
        inverse = change.inverse()
        base = sl2(GF5)
        columns = change.column_vectors()
        table = [[inverse.matvec(base.bracket(u, v)) for v in columns] for u in columns]
        return LieAlgebra(GF5, table)
    # mostly-zero constants keep the Jacobi filter from rejecting too often
    sparse = st.one_of(st.just(0), st.just(0), residues)
    coeffs = draw(st.lists(sparse, min_size=9, max_size=9))
    algebra = LieAlgebra.from_brackets(GF5, 3, {(0, 1): dict(enumerate(coeffs[0:3])),
                                                (0, 2): dict(enumerate(coeffs[3:6])),
                                                (1, 2): dict(enumerate(coeffs[6:9]))})
    assume(validate_lie(algebra))
    return algebra


def members(s: Subspace) -> list:
    return [s.combine(coords) for coords in product(range(5), repeat=s.dim)]


def subspaces(algebra):
    return st.lists(st.lists(residues, min_size=algebra.dim, max_size=algebra.dim), max_size=2).map(
        lambda vs: span_in(algebra, vs))


class TestSubspaceProducts(TestCase):
    """Test [A, B], subalgebras and ideals
    """
    def setUp(self):
        self.heis = heisenberg3(Q)
        self.x, self.a, self.b = self.heis.basis_vectors()

    def test_product(self):
        """[L, L] of the Heisenberg algebra is its center
        """
        whole = full_subspace(self.heis)
        self.assertEqual(product_subspace(self.heis, whole, whole), span_in(self.heis, [self.b]))
        line = span_in(self.heis, [self.a])
        self.assertTrue(product_subspace(self.heis, line, line).is_zero())

    def test_generated(self):
        """Closures under the bracket
        """
        self.assertEqual(subalgebra_generated(self.heis, [self.x]).dim, 1)
        self.assertEqual(subalgebra_generated(self.heis, [self.x, self.a]), full_subspace(self.heis))
        self.assertEqual(ideal_generated(self.heis, [self.x]), span_in(self.heis, [self.x, self.b]))
        self.assertTrue(ideal_generated(self.heis, []).is_zero())

    def test_ideals(self):
        """span{a, b} is an ideal, span{a} only a subalgebra
        """
        ab = span_in(self.heis, [self.a, self.b])
        a_line = span_in(self.heis, [self.a])
        self.assertTrue(is_ideal(self.heis, ab))
        self.assertFalse(is_ideal(self.heis, a_line))
        self.assertTrue(is_subalgebra(self.heis, a_line))
        self.assertFalse(is_subalgebra(self.heis, span_in(self.heis, [self.x, self.a])))
        self.assertTrue(is_ideal_of(self.heis, ab, a_line))
        self.assertFalse(is_ideal_of(self.heis, a_line, ab))

    def test_subalgebra_as_algebra(self):
        """The algebra induced on span{a, b} is abelian; non-subalgebras are refused
        """
        induced = subalgebra_as_algebra(self.heis, span_in(self.heis, [self.a, self.b]))
        self.assertEqual(induced.labels, ('a', 'b'))
        self.assertEqual(induced, abelian(2, Q))
        with self.assertRaises(NotASubalgebraError):
            subalgebra_as_algebra(self.heis, span_in(self.heis, [self.x, self.a]))

    @settings(max_examples=200, deadline=None, suppress_health_check=SLOW_DRAWS)
    @given(small_lie_algebras().flatmap(lambda alg: st.tuples(st.just(alg), subspaces(alg), subspaces(alg))))
    def test_product_against_enumeration(self, case):
        """[A, B] equals the span of all brackets of members of A and B
        """
        algebra, a, b = case
        self.assertTrue(validate_lie(algebra))
        brute = subspace_span([algebra.bracket(u, v) for u in members(a) for v in members(b)], algebra.dim, GF5)
        self.assertEqual(product_subspace(algebra, a, b), brute)
        self.assertEqual(product_subspace(algebra, a, b), product_subspace(algebra, b, a))


class TestSeries(TestCase):
    """Test the lower central and derived series
    """
    def test_heisenberg(self):
        """Class 2, derived length 2
        """
        heis = heisenberg3(Q)
        lcs, der = lower_central_series(heis), derived_series(heis)
        self.assertEqual(lcs.dims, [3, 1, 0])
        self.assertEqual(lcs.class_label, 2)
        self.assertEqual(der.dims, [3, 1, 0])
        self.assertTrue(is_k_nilpotent(heis, 2))
        self.assertFalse(is_k_nilpotent(heis, 1))
        self.assertTrue(is_n_solvable(heis, 2))
        self.assertFalse(is_n_solvable(heis, 1))
        self.assertEqual(format_series(heis, lcs), ["L^0 = span{x, a, b}", "L^1 = span{b}", "L^2 = 0"])
        self.assertEqual(format_series(heis, der)[1], "L^(1) = span{b}")

    def test_abelian_and_zero(self):
        """A nonzero abelian algebra has class 1, the zero algebra class 0
        """
        self.assertEqual(lower_central_series(abelian(3, Q)).dims, [3, 0])
        self.assertEqual(lower_central_series(abelian(3, Q)).class_index, 1)
        zero = lower_central_series(abelian(0, Q))
        self.assertEqual(zero.dims, [0])
        self.assertEqual(zero.class_index, 0)

    def test_stabilizing_series(self):
        """sl(2) is perfect; gl(2) stops at sl(2)
        """
        lcs = lower_central_series(sl2(Q))
        self.assertEqual(lcs.dims, [3])
        self.assertFalse(lcs.terminates)
        self.assertEqual(lcs.class_label, 'not-nilpotent')
        self.assertEqual(derived_series(sl2(Q)).class_label, 'not-solvable')
        self.assertEqual(lower_central_series(gl(2, Q)).dims, [4, 3])
        self.assertEqual(derived_series(gl(2, Q)).kind, SeriesKind.DERIVED)
        self.assertFalse(is_k_nilpotent(gl(2, Q), 10))

    def test_not_lie(self):
        """Series refuse tables that break Jacobi
        """
        broken = LieAlgebra.from_brackets(Q, 3, {(0, 1): {2: 1}, (1, 2): {1: 1}})
        with self.assertRaises(NotALieAlgebraError):
            lower_central_series(broken)
        with self.assertRaises(NotALieAlgebraError):
            derived_series(broken)

    @settings(max_examples=40, deadline=None, suppress_health_check=SLOW_DRAWS)
    @given(small_lie_algebras())
    def test_series_terms_are_nested_ideals(self, algebra):
        """Every term is an ideal inside the previous one, and derived terms sit in lower central terms
        """
        lcs, der = lower_central_series(algebra), derived_series(algebra)
        for series in (lcs, der):
            for previous, term in zip(series.terms, series.terms[1:]):
                self.assertTrue(is_ideal(algebra, term))
                self.assertTrue(subspace_leq(term, previous))
                self.assertNotEqual(term, previous)
        for k, term in enumerate(der.terms[:len(lcs.terms)]):
            self.assertTrue(subspace_leq(term, lcs.terms[k]))
        if lcs.terminates and der.terminates:
            self.assertLessEqual(der.class_index, lcs.class_index)


if __name__ == "__main__":
    main()
