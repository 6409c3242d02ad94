#!/usr/bin/env python3

"""Test the JSON formats for algebras, actions, matrices and vector lists
"""

from fractions import Fraction
from pathlib import Path
from unittest import TestCase, main

from vwlab.errors import SchemaError
from vwlab.exactmath import ExactMatrix, FieldSpec
from vwlab.lie import (dump_algebra, heisenberg3, load_action, load_algebra, load_matrix, load_vectors,
                       semidirect, subalgebra_generated, validate_lie)

DATA_DIR = Path(__file__).resolve().parents[2] / 'data' / 'lie'
Q = FieldSpec.rationals()


class TestLoadAlgebra(TestCase):
    """Test reading and writing algebra files
    """
    def test_load_file(self):
        """The Heisenberg file matches the built-in table
        """
        heis = load_algebra(DATA_DIR / 'heisenberg.json')
        self.assertEqual(heis, heisenberg3(Q))
        self.assertEqual(heis.labels, ('x', 'a', 'b'))
        self.assertEqual(load_algebra(str(DATA_DIR / 'heisenberg_prime.json')).bracket_table(), {"[y,b]": "a"})

    def test_dump_is_readable(self):
        """dump_algebra writes what load_algebra reads
        """
        heis = heisenberg3(FieldSpec.prime(5))
        data = dump_algebra(heis)
        self.assertEqual(data["field"], "GF(5)")
        self.assertEqual(data["brackets"], [{"i": 0, "j": 1, "coeffs": [{"k": 2, "c": "1"}]}])
        self.assertEqual(load_algebra(data), heis)

    def test_broken_file_loads(self):
        """Loading does not validate; validation reports the failing triple
        """
        broken = load_algebra(DATA_DIR / 'broken.json')
        self.assertEqual(validate_lie(broken).triple, (0, 1, 2))

    def test_format_errors(self):
        """Every rejection carries the path of the offending field
        """
        base = {"field": "Q", "dim": 2}
        cases = {
            'brackets/0': {**base, "brackets": [{"i": 1, "j": 0, "coeffs": []}]},
            'brackets/1': {**base, "brackets": [{"i": 0, "j": 1, "coeffs": []}, {"i": 0, "j": 1, "coeffs": []}]},
            'brackets/0/coeffs/0/k': {**base, "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 2, "c": "1"}]}]},
            'brackets/0/coeffs/0/c': {**base, "brackets": [{"i": 0, "j": 1, "coeffs": [{"k": 0, "c": "x"}]}]},
            'labels': {**base, "labels": ["u", "u"]},
            'field': {"field": "GF(6)", "dim": 2},
            'dim': {"field": "Q", "dim": -1},
        }
        for path, data in cases.items():
            with self.subTest(path=path):
                with self.assertRaises(SchemaError) as ctx:
                    load_algebra(data)
                self.assertEqual(ctx.exception.path, path)

    def test_bad_json_text(self):
        """Malformed JSON reports its line
        """
        with self.assertRaises(SchemaError) as ctx:
            load_algebra('{"field": "Q",\n "dim": }')
        self.assertEqual(ctx.exception.line, 2)


class TestLoadOthers(TestCase):
    """Test matrices, vector lists and actions
    """
    def setUp(self):
        self.heis = load_algebra(DATA_DIR / 'heisenberg.json')
        self.x = load_algebra(DATA_DIR / 'abelian3.json')

    def test_load_matrix(self):
        """Strings and integers are both accepted
        """
        self.assertEqual(load_matrix([["1/2", 0], [1, "-1"]], Q),
                         ExactMatrix.from_rows(Q, [[Fraction(1, 2), 0], [1, -1]]))
        with self.assertRaises(SchemaError):
            load_matrix([["1", "2"], ["3"]], Q)
        with self.assertRaises(SchemaError):
            load_matrix('[["1.5"]]', Q)

    def test_load_vectors(self):
        """Label objects and coefficient lists
        """
        vectors = load_vectors('[{"x": "1"}, ["0", "1", "0"]]', self.heis)
        self.assertEqual(vectors, [self.heis.vector([1, 0, 0]), self.heis.vector([0, 1, 0])])
        self.assertEqual(subalgebra_generated(self.heis, vectors).dim, 3)
        with self.assertRaises(SchemaError) as ctx:
            load_vectors('[["1", "0", "0"], {"z": "1"}]', self.heis)
        self.assertEqual(ctx.exception.path, '1')
        with self.assertRaises(SchemaError):
            load_vectors('[["1", "0"]]', self.heis)

    def test_load_action(self):
        """The action file rebuilds the six-dimensional product table
        """
        psi = load_action(DATA_DIR / 'psi.json', self.heis, self.x)
        product = semidirect(self.heis, self.x, psi)
        self.assertEqual(product, load_algebra(DATA_DIR / 'bpsi.json'))
        self.assertEqual(product.bracket_table(),
                         {"[x,a]": "b", "[x,e3]": "-e2", "[a,e2]": "e1", "[b,e3]": "e1"})

    def test_bad_action(self):
        """Unknown keys and wrong shapes
        """
        with self.assertRaises(SchemaError) as ctx:
            load_action('{"z": [["0"]]}', self.heis, self.x)
        self.assertEqual(ctx.exception.path, 'z')
        with self.assertRaises(SchemaError):
            load_action('{"0": [["0", "0"], ["0", "0"]]}', self.heis, self.x)


if __name__ == "__main__":
    main()
