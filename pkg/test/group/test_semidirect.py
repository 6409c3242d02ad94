#!/usr/bin/env python3

"""Test vector semidirect products and generator files
"""

from pathlib import Path
from unittest import TestCase, main

import numpy as np

from vwlab.errors import FieldError, NonInvertibleGeneratorError, SchemaError
from vwlab.group import (MatrixGroup, block_element, dump_generators, enumerate_group, generate, is_normal_in,
                         load_generators, split_block, translation, vector_semidirect)

DATA_DIR = Path(__file__).resolve().parents[2] / 'data' / 'groups'

X = np.array([[1, 1, 0], [0, 1, 0], [0, 0, 1]])


class TestVectorSemidirect(TestCase):
    """Test G ⋉ Z_p^n as block matrices
    """
    def test_blocks(self):
        """(g, x)(g', x') = (gg', x + g x')
        """
        g, x = X, np.array([1, 2, 3])
        h, y = X.T, np.array([0, 4, 1])
        product = block_element(g, x, 5) @ block_element(h, y, 5) % 5
        gh, xy = split_block(product)
        self.assertTrue(np.array_equal(gh, g @ h % 5))
        self.assertTrue(np.array_equal(xy, (x + g @ y) % 5))
        self.assertEqual(translation(3, 1, 5)[:, 3].tolist(), [0, 1, 0, 1])

    def test_generators(self):
        """Generators of G keep their labels; translations follow
        """
        product = vector_semidirect(MatrixGroup(5, 3, {"x": X}))
        self.assertEqual(product.labels, ('x', 't1', 't2', 't3'))
        self.assertEqual(product.n, 4)
        self.assertEqual(enumerate_group(product).order, 625)
        named = vector_semidirect(MatrixGroup(5, 3, {"x": X}), ['u', 'v', 'w'])
        self.assertEqual(named.labels, ('x', 'u', 'v', 'w'))

    def test_translations_normal(self):
        """The translations form a normal subgroup of order p^n
        """
        product = vector_semidirect(MatrixGroup(5, 3, {"x": X}))
        translations = generate(5, 4, [translation(3, i, 5) for i in range(3)])
        self.assertEqual(translations.order, 125)
        self.assertTrue(is_normal_in(translations, product.matrices, 5))

    def test_label_problems(self):
        """Wrong counts and clashes are refused
        """
        group = MatrixGroup(5, 3, {"t1": X})
        with self.assertRaises(ValueError):
            vector_semidirect(group)
        with self.assertRaises(ValueError):
            vector_semidirect(MatrixGroup(5, 3, {"x": X}), ['u'])

    def test_bpsi_file(self):
        """The stored generators of B ⋉ Z_5^3 are the ones built from B
        """
        built = vector_semidirect(load_generators(DATA_DIR / 'bgens.json'))
        stored = load_generators(DATA_DIR / 'bpsi.json')
        self.assertEqual(dump_generators(built), dump_generators(stored))


class TestGeneratorFiles(TestCase):
    """Test reading and writing generator files
    """
    def test_load(self):
        """Labels keep file order
        """
        group = load_generators(DATA_DIR / 'bgens.json')
        self.assertEqual(group.labels, ('x', 'a', 'b'))
        self.assertEqual(group.p, 5)
        self.assertEqual(load_generators(dump_generators(group)).labels, group.labels)

    def test_errors(self):
        """Entries outside [0, p), bad shapes, composite p and singular generators
        """
        with self.assertRaises(SchemaError) as ctx:
            load_generators({"p": 5, "n": 2, "generators": {"g": [[5, 0], [0, 1]]}})
        self.assertEqual(ctx.exception.path, 'generators/g')
        with self.assertRaises(SchemaError):
            load_generators({"p": 5, "n": 2, "generators": {"g": [[1, 0, 0], [0, 1, 0]]}})
        with self.assertRaises(SchemaError):
            load_generators({"p": 5, "n": 2, "generators": {"g": [[-1, 0], [0, 1]]}})
        with self.assertRaises(SchemaError):
            load_generators('{"p": 5, "n": 2}')
        with self.assertRaises(FieldError):
            load_generators({"p": 6, "n": 1, "generators": {"g": [[1]]}})
        with self.assertRaises(NonInvertibleGeneratorError):
            load_generators({"p": 5, "n": 1, "generators": {"g": [[0]]}})


if __name__ == "__main__":
    main()
