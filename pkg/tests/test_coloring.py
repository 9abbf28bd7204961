import unittest

from berge_coloring import Coloring, Hypergraph
from berge_coloring.coloring import (
    STRONG,
    WEAK,
    edge_ok,
    ensure_valid,
    greedy_extend,
    merge_to_weak,
    validate,
)
from berge_coloring.exceptions import (
    InvalidColoringError,
    NotUniformError,
    PaletteExceededError,
    PartialColoringError,
    UsageException,
)

from .data.hypergraphs import k4_3, k5_4, mixed, single_triple, triangle


class ColoringTests(unittest.TestCase):
    def test_compaction(self):
        c = Coloring([7, 3, 7, 10])
        self.assertEqual(c.colors, (1, 0, 1, 2))
        self.assertEqual(c.palette_size, 3)
        self.assertEqual(len(c), 4)
        self.assertEqual(c[3], 2)
        self.assertEqual(c.mode, STRONG)

    def test_equality(self):
        self.assertEqual(Coloring([1, 5], WEAK), Coloring([0, 1], WEAK))
        self.assertNotEqual(Coloring([0, 1], WEAK), Coloring([0, 1], STRONG))
        self.assertEqual(
            repr(Coloring([0, 1, 1], WEAK)), "<Coloring mode=weak palette_size=2 n=3>"
        )

    def test_partial(self):
        with self.assertRaises(PartialColoringError):
            Coloring([0, None, 1])

    def test_unknown_mode(self):
        with self.assertRaises(UsageException):
            Coloring([0], "medium")

    def test_empty(self):
        c = Coloring([])
        self.assertEqual(c.palette_size, 0)
        self.assertTrue(validate(Hypergraph(0), c))


class ValidateTests(unittest.TestCase):
    def test_edge_ok(self):
        self.assertTrue(edge_ok([0, 1, 2], (0, 1, 2), STRONG))
        self.assertFalse(edge_ok([0, 1, 1], (0, 1, 2), STRONG))
        self.assertTrue(edge_ok([0, 1, 1], (0, 1, 2), WEAK))
        self.assertFalse(edge_ok([1, 1, 1], (0, 1, 2), WEAK))

    def test_validate_reports_first_violation(self):
        result = validate(mixed, Coloring([0, 1, 2, 2, 0, 0]))
        self.assertFalse(result)
        self.assertEqual(result.edge_index, 1)
        self.assertEqual(result.edge, (2, 3))

        self.assertTrue(validate(mixed, Coloring([0, 1, 2, 0, 1, 0])))

    def test_validate_wrong_length(self):
        with self.assertRaises(PartialColoringError):
            validate(triangle, Coloring([0, 1]))

    def test_ensure_valid(self):
        c = Coloring([0, 1, 2])
        self.assertIs(ensure_valid(triangle, c), c)

        with self.assertRaises(InvalidColoringError) as ctx:
            ensure_valid(single_triple, Coloring([0, 0, 0], WEAK))
        self.assertEqual(ctx.exception.edge_index, 0)
        self.assertEqual(ctx.exception.edge, (0, 1, 2))


class MergeToWeakTests(unittest.TestCase):
    def test_merge(self):
        """A strong 4-coloring of K_4^(3) becomes a weak 2-coloring"""
        weak = merge_to_weak(k4_3, Coloring([0, 1, 2, 3]))
        self.assertEqual(weak.mode, WEAK)
        self.assertEqual(weak.colors, (0, 0, 1, 1))
        self.assertTrue(validate(k4_3, weak))

    def test_merge_four_uniform(self):
        weak = merge_to_weak(k5_4, Coloring([0, 1, 2, 3, 4]))
        self.assertEqual(weak.palette_size, 2)

    def test_merge_rejects(self):
        with self.assertRaises(NotUniformError):
            merge_to_weak(mixed, Coloring(range(6)))
        with self.assertRaises(UsageException):
            merge_to_weak(k4_3, Coloring([0, 1, 2, 3], WEAK))
        with self.assertRaises(InvalidColoringError):
            merge_to_weak(k4_3, Coloring([0, 0, 1, 2]))


class GreedyExtendTests(unittest.TestCase):
    def test_strong(self):
        colors = [None, None, None]
        greedy_extend(triangle, colors, [2, 0, 1], STRONG, 3)
        self.assertEqual(colors, [1, 2, 0])

    def test_weak(self):
        colors = greedy_extend(single_triple, [None, None, None], [0, 1, 2], WEAK, 2)
        self.assertEqual(colors, [0, 0, 1])

    def test_palette_exceeded(self):
        with self.assertRaises(PaletteExceededError) as ctx:
            greedy_extend(triangle, [None] * 3, [0, 1, 2], STRONG, 2)
        self.assertEqual(ctx.exception.vertex, 2)
        self.assertEqual(ctx.exception.palette, 2)
