#!/usr/bin/env python3

"""Test the field descriptions and exact scalars
"""

from fractions import Fraction
from unittest import TestCase, main

from hypothesis import given, strategies as st

from vwlab.errors import FieldError
from vwlab.exactmath import FieldKind, FieldSpec, Scalar, is_prime, scalar_arith

GF5 = FieldSpec.prime(5)
GF7 = FieldSpec.prime(7)
Q = FieldSpec.rationals()


class TestFieldSpec(TestCase):
    """Test FieldSpec construction and parsing
    """
    def test_parse(self):
        """Read the two text forms
        """
        self.assertEqual(FieldSpec.parse("Q"), Q)
        self.assertEqual(FieldSpec.parse(" GF( 5 ) "), GF5)
        self.assertEqual(GF5.characteristic, 5)
        self.assertEqual(Q.characteristic, 0)
        self.assertEqual(str(GF5), "GF(5)")

    def test_bad_fields(self):
        """Composite moduli and unknown names are refused
        """
        for text in ("GF(4)", "GF(1)", "R", "GF5", ""):
            with self.assertRaises(FieldError):
                FieldSpec.parse(text)
        with self.assertRaises(FieldError):
            FieldSpec(FieldKind.RATIONALS, 3)
        with self.assertRaises(TypeError):
            FieldSpec.parse(5)

    def test_is_prime(self):
        """Trial division on small integers
        """
        primes = [n for n in range(30) if is_prime(n)]
        self.assertEqual(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])


class TestScalar(TestCase):
    """Test arithmetic on Scalars
    """
    def test_canonical_residues(self):
        """Prime-field values are reduced into [0, p)
        """
        self.assertEqual(Scalar(GF5, 7).value, 2)
        self.assertEqual(str(GF5(-1)), "4")
        self.assertEqual(GF5.parse_scalar("1/2"), GF5(3))

    def test_rationals(self):
        """Rationals stay in lowest terms
        """
        self.assertEqual(str(Q(Fraction(6, 8))), "3/4")
        self.assertEqual(Q.parse_scalar(" -3/4 "), Q(Fraction(-3, 4)))
        self.assertEqual(Q(1) / 3 + Q(Fraction(2, 3)), Q.one)

    def test_inverse(self):
        """Every nonzero element has an inverse, zero has none
        """
        self.assertEqual(GF5(2).inverse(), GF5(3))
        self.assertEqual(GF5(2) ** -1, GF5(3))
        with self.assertRaises(ZeroDivisionError):
            GF5.zero.inverse()
        with self.assertRaises(ZeroDivisionError):
            GF5.parse_scalar("1/5")

    def test_refusals(self):
        """Floats, bad text and mixed fields are refused
        """
        with self.assertRaises(TypeError):
            Scalar(Q, 0.5)
        with self.assertRaises(ValueError):
            Q.parse_scalar("1.5")
        with self.assertRaises(FieldError):
            GF5(1) + GF7(1)
        with self.assertRaises(FieldError):
            GF5(GF7(1))
        with self.assertRaises(AttributeError):
            GF5.one.value = 3

    def test_scalar_arith(self):
        """The named operations agree with the operators
        """
        a, b = GF7(3), GF7(5)
        self.assertEqual(scalar_arith(a, b, 'add'), GF7(1))
        self.assertEqual(scalar_arith(a, b, 'sub'), GF7(5))
        self.assertEqual(scalar_arith(a, b, 'mul'), GF7(1))
        self.assertEqual(scalar_arith(a, b, 'div'), GF7(2))
        with self.assertRaises(ZeroDivisionError):
            scalar_arith(a, GF7.zero, 'div')
        with self.assertRaises(ValueError):
            scalar_arith(a, b, 'pow')

    @given(st.integers(), st.integers().filter(lambda n: n % 7 != 0))
    def test_division_undoes_multiplication(self, a, b):
        """(a * b) / b == a in GF(7)
        """
        self.assertEqual(GF7(a) * b / b, GF7(a))

    @given(st.fractions(), st.fractions())
    def test_rational_arithmetic_matches_fraction(self, a, b):
        """Q scalars behave exactly like Fraction
        """
        self.assertEqual((Q(a) + Q(b)).value, a + b)
        self.assertEqual((Q(a) * Q(b)).value, a * b)
        self.assertEqual((Q(a) - b).value, a - b)

    def test_hash_agrees_with_equality(self):
        """Scalars equal to plain numbers share their hash
        """
        self.assertEqual(hash(Q(1)), hash(1))
        self.assertEqual(hash(Q(Fraction(3, 4))), hash(Fraction(3, 4)))
        self.assertEqual(hash(GF5(3)), hash(3))
        self.assertIn(1, {Q(1)})
        self.assertIn(Q(Fraction(1, 2)), {Fraction(1, 2): 'half'})
        self.assertEqual(len({Q(2), 2, Fraction(2)}), 1)
        self.assertEqual(len({GF5(1), GF7(1)}), 2)


def reduce_mod(q: Fraction, p: int) -> int:
    return q.numerator * pow(q.denominator, -1, p) % p


def fractions_prime_to(p: int):
    return st.builds(Fraction, st.integers(-10 ** 6, 10 ** 6),
                     st.integers(1, 10 ** 6).filter(lambda d: d % p != 0))


class TestPrimeFieldAgainstRationals(TestCase):
    """GF(p) arithmetic agrees with rational arithmetic reduced mod p
    """
    def check(self, p: int, a: Fraction, b: Fraction):
        field = FieldSpec.prime(p)
        x, y = field(a), field(b)
        self.assertEqual(x.value, reduce_mod(a, p))
        self.assertEqual((x + y).value, reduce_mod(a + b, p))
        self.assertEqual((x - y).value, reduce_mod(a - b, p))
        self.assertEqual((x * y).value, reduce_mod(a * b, p))
        self.assertEqual((-x).value, reduce_mod(-a, p))
        if b.numerator % p:
            self.assertEqual((x / y).value, reduce_mod(a / b, p))
            self.assertEqual(y.inverse().value, reduce_mod(1 / b, p))

    @given(fractions_prime_to(5), fractions_prime_to(5))
    def test_gf5(self, a, b):
        """Sum, difference, product, quotient and inverse in GF(5)
        """
        self.check(5, a, b)

    @given(fractions_prime_to(7), fractions_prime_to(7))
    def test_gf7(self, a, b):
        """Sum, difference, product, quotient and inverse in GF(7)
        """
        self.check(7, a, b)


if __name__ == "__main__":
    main()
