import unittest
from unittest.mock import Mock, patch

from berge_coloring import Hypergraph
from berge_coloring.budget import Budget
from berge_coloring.coloring import STRONG, WEAK, validate
from berge_coloring.colorers import (
    BergePathColorer,
    ExactColorer,
    PeelColorer,
    color_bpk_free,
    peel_color_strong,
)
from berge_coloring.colorers.path import palette_for
from berge_coloring.constructions import disjoint_union, fano
from berge_coloring.detect import verify_witness
from berge_coloring.dfs import dfs_build
from berge_coloring.exceptions import (
    BergePatternFound,
    BergePkFound,
    BudgetExceededError,
    NonemptyCoreError,
    NotUniformError,
    PaletteExceededError,
    UncertifiedFailureError,
    UnsupportedParameterError,
    UsageException,
)
from berge_coloring.hypergraph import peel
from berge_coloring.patterns import path

from .data.hypergraphs import k4_3, k5_3, k5_4, loose_path, three_k5


class PeelColorerTests(unittest.TestCase):
    def test_success(self):
        colorer = PeelColorer(5)
        c = colorer.color(k5_3)
        self.assertEqual(c.palette_size, 5)
        self.assertTrue(validate(k5_3, c))
        self.assertIs(colorer.last_coloring, c)
        self.assertEqual(colorer.failures, 0)

    def test_core_without_pattern(self):
        """Without a pattern the core is handed to the caller"""
        colorer = PeelColorer(4)
        with self.assertRaises(NonemptyCoreError) as ctx:
            colorer.color(k5_3)
        self.assertEqual(ctx.exception.core.n, 5)
        self.assertEqual(ctx.exception.threshold, 4)
        self.assertEqual(colorer.failures, 1)
        self.assertIsNone(colorer.last_coloring)

    def test_core_with_pattern(self):
        colorer = PeelColorer(4, pattern="path:4")
        with self.assertRaises(BergePatternFound) as ctx:
            colorer.color(k5_3)
        self.assertEqual(ctx.exception.pattern, "path:4")
        self.assertTrue(verify_witness(k5_3, path(4), ctx.exception.witness))
        self.assertIsInstance(ctx.exception.__cause__, NonemptyCoreError)

    def test_function(self):
        self.assertEqual(peel_color_strong(loose_path, 3).palette_size, 3)
        with self.assertRaises(NonemptyCoreError):
            peel_color_strong(k4_3, 3)

    def test_bad_threshold(self):
        with self.assertRaises(UnsupportedParameterError):
            PeelColorer(0)
        self.assertEqual(
            repr(PeelColorer(3, "star:3")), "<PeelColorer threshold=3 pattern=star:3>"
        )


class BergePathColorerTests(unittest.TestCase):
    def test_disjoint_cliques(self):
        """Three copies of K_5^(3) have no Berge path with five edges"""
        strong = BergePathColorer(5).color(three_k5)
        self.assertEqual(strong.palette_size, 5)
        self.assertTrue(validate(three_k5, strong))

        weak = BergePathColorer(5, WEAK).color(three_k5)
        self.assertLessEqual(weak.palette_size, 3)
        self.assertEqual(weak.mode, WEAK)
        self.assertTrue(validate(three_k5, weak))

    def test_certificate(self):
        """K_5^(3) has a Berge path with three edges; the DFS tree is too deep"""
        colorer = BergePathColorer(3)
        with self.assertRaises(BergePkFound) as ctx:
            colorer.color(k5_3)
        self.assertEqual(ctx.exception.pattern, "path:3")
        self.assertTrue(verify_witness(k5_3, path(3), ctx.exception.witness))
        self.assertIsInstance(ctx.exception.__cause__, PaletteExceededError)
        self.assertEqual(colorer.failures, 1)

    def test_rejects(self):
        with self.assertRaises(NotUniformError):
            BergePathColorer(5).color(k5_4)
        with self.assertRaises(UnsupportedParameterError):
            BergePathColorer(2)
        with self.assertRaises(UsageException):
            BergePathColorer(5, "medium")

    @patch.object(BergePathColorer, "certify", return_value=None)
    @patch.object(BergePathColorer, "_color")
    def test_uncertified_failure(self, mocked_color: Mock, mocked_certify: Mock):
        """
        Tests berge_coloring.colorers.base.ColorerBase.color() when the
        algorithm fails and certify() comes back empty handed.

        Situations tested:
        - the failure is wrapped in UncertifiedFailureError with the
          original exception as its cause
        - the failure counter goes up and no coloring is remembered
        """
        cause = PaletteExceededError(0, 5)
        mocked_color.side_effect = cause
        colorer = BergePathColorer(5)

        with self.assertRaises(UncertifiedFailureError) as ctx:
            colorer.color(k5_3)
        self.assertIs(ctx.exception.cause, cause)
        mocked_certify.assert_called_once_with(k5_3, cause)
        self.assertEqual(colorer.failures, 1)
        self.assertIsNone(colorer.last_coloring)

    def test_callbacks(self):
        colorer = BergePathColorer(5)
        with patch.object(colorer, "on_color") as on_color, patch.object(
            colorer, "on_color_success"
        ) as on_success:
            c = colorer.color(three_k5)
        on_color.assert_called_once_with(three_k5)
        on_success.assert_called_once_with(c)

        with patch.object(colorer, "on_color") as on_color, patch.object(
            colorer, "on_color_success"
        ) as on_success:
            with self.assertRaises(NotUniformError):
                colorer.color(k5_4)
        on_color.assert_called_once_with(k5_4)
        on_success.assert_not_called()

    def test_function(self):
        c = color_bpk_free(loose_path, 4, budget=Budget())
        self.assertLessEqual(c.palette_size, 4)
        self.assertTrue(validate(loose_path, c))

    def test_palette_for(self):
        self.assertEqual(palette_for(5, STRONG), 5)
        self.assertEqual(palette_for(6, WEAK), 3)
        self.assertEqual(palette_for(3, WEAK), 2)


@patch("berge_coloring.colorers.path.dfs_build", wraps=dfs_build)
@patch("berge_coloring.colorers.path.peel", side_effect=lambda h, k: peel(h, 1))
class CorePipelineTests(unittest.TestCase):
    """
    Peeling at k empties every Berge path free input, so the core is forced
    here by peeling isolated vertices only.
    """

    host = disjoint_union([k5_3, k5_3, Hypergraph(1)])

    def test_strong(self, mocked_peel: Mock, mocked_dfs: Mock):
        """
        Situations tested:
        - both cliques reach the DFS coloring as core components
        - the DFS tree of a clique is the path 0-1-3-2-4, one color per depth
        - the isolated vertex is put back greedily with the first color
        """
        c = color_bpk_free(self.host, 5)
        mocked_peel.assert_called_once_with(self.host, 5)
        self.assertEqual(mocked_dfs.call_count, 2)
        self.assertEqual(c.colors[:5], (0, 1, 3, 2, 4))
        self.assertEqual(c.colors[10], 0)
        self.assertEqual(c.palette_size, 5)
        self.assertTrue(validate(self.host, c))

    def test_weak(self, mocked_peel: Mock, mocked_dfs: Mock):
        c = color_bpk_free(self.host, 5, WEAK)
        self.assertEqual(mocked_dfs.call_count, 2)
        # depth modulo 3 along the path 0-1-3-2-4
        self.assertEqual(c.colors[:5], (0, 1, 0, 2, 1))
        self.assertEqual(c.palette_size, 3)
        self.assertTrue(validate(self.host, c))

    def test_deep_tree_is_certified(self, mocked_peel: Mock, mocked_dfs: Mock):
        """A clique's DFS tree is too deep for three colors"""
        with self.assertRaises(BergePkFound) as ctx:
            color_bpk_free(self.host, 3)
        self.assertIsInstance(ctx.exception.__cause__, PaletteExceededError)
        self.assertTrue(verify_witness(self.host, path(3), ctx.exception.witness))
        mocked_dfs.assert_called_once()


class ExactColorerTests(unittest.TestCase):
    def test_modes(self):
        self.assertEqual(ExactColorer().color(fano()).palette_size, 7)
        self.assertEqual(ExactColorer(WEAK).color(k5_3).palette_size, 3)

    def test_budget(self):
        colorer = ExactColorer(WEAK, {"max_nodes": 3})
        with self.assertRaises(BudgetExceededError):
            colorer.color(fano())
        self.assertEqual(colorer.failures, 0)
