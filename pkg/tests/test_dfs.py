import itertools
import math
from typing import Tuple
import unittest

from berge_coloring import Hypergraph
from berge_coloring.coloring import validate
from berge_coloring.constructions import complete_r_graph
from berge_coloring.dfs import DfsTree, dfs_build, dfs_color_strong, dfs_color_weak
from berge_coloring.exceptions import (
    InvalidVertexError,
    NotUniformError,
    PaletteExceededError,
    UsageException,
)

from .data.corpus import height_violations, special_pair_violations
from .data.hypergraphs import bowtie, k4_3, k5_3, k5_4, loose_path, mixed


class DfsTreeTests(unittest.TestCase):
    def setUp(self):
        #      0
        #    1   2
        #    3
        self.tree = DfsTree(0)
        self.tree.attach(0, 1, 0)
        self.tree.attach(1, 3, 1)
        self.tree.attach(0, 2, 0)
        self.tree.add_special_pair(1, 2)

    def test_structure(self):
        self.assertEqual(len(self.tree), 4)
        self.assertIn(3, self.tree)
        self.assertNotIn(4, self.tree)
        self.assertEqual(self.tree.height, 2)
        self.assertEqual(self.tree.children(0), [1, 2])
        self.assertEqual(self.tree.order, [0, 1, 3, 2])
        self.assertEqual(self.tree.depth[3], 2)

    def test_paths_and_subtrees(self):
        self.assertEqual(self.tree.path_to_root(3), [3, 1, 0])
        self.assertEqual(self.tree.path_to_root(0), [0])
        self.assertEqual(list(self.tree.subtree(0)), [0, 1, 3, 2])
        self.assertEqual(list(self.tree.subtree(1)), [1, 3])

    def test_special_pairs(self):
        self.assertEqual(self.tree.special_pairs, {1: [(1, 2)]})
        self.assertEqual(self.tree.second_members(), {2: 1})
        self.assertEqual(repr(self.tree), "<DfsTree root=0 size=4 height=2>")


class DfsBuildTests(unittest.TestCase):
    def test_loose_path(self):
        """
        From vertex 0 the first edge leads to 1, which has nowhere else to
        go; 2 then hangs below 0 as 1's special partner and carries on.
        """
        t = dfs_build(loose_path, 0)
        self.assertEqual(t.child_order[0], [1, 2])
        self.assertEqual(t.special_pairs[1], [(1, 2)])
        self.assertEqual(t.child_order[2], [3, 4])
        self.assertEqual(t.child_order[4], [5, 6])
        self.assertEqual(t.height, 3)
        self.assertEqual(special_pair_violations(loose_path, t), [])

    def test_spans_component_only(self):
        t = dfs_build(mixed, 0)
        self.assertEqual(sorted(t.order), [0, 1, 2, 3, 4])
        self.assertNotIn(5, t)
        self.assertEqual(t.defining[3], 1)

    def test_graph_edges_make_no_pairs(self):
        path = Hypergraph(4, [(0, 1), (1, 2), (2, 3)])
        t = dfs_build(path, 1)
        self.assertEqual(t.special_pairs, {})
        self.assertEqual(t.child_order[1], [0, 2])
        self.assertEqual(t.height, 2)

    def test_every_root(self):
        for h in (k4_3, k5_3, bowtie, loose_path):
            for root in range(h.n):
                t = dfs_build(h, root)
                self.assertEqual(len(t), h.n)
                self.assertEqual(special_pair_violations(h, t), [])

    def test_complete_graph_heights(self):
        """A Berge-P_k-free hypergraph has DFS trees of height at most k-1"""
        self.assertEqual(height_violations(dfs_build(k5_3, 0), 5), [])

    def test_rejects(self):
        with self.assertRaises(NotUniformError):
            dfs_build(k5_4, 0)
        with self.assertRaises(InvalidVertexError):
            dfs_build(bowtie, 5)


class DfsColorTests(unittest.TestCase):
    def test_strong_on_complete_graphs(self):
        for k in (3, 4, 5):
            h = complete_r_graph(k, 3)
            t = dfs_build(h, 0)
            c = dfs_color_strong(h, t, k)
            self.assertEqual(c.palette_size, k)
            self.assertTrue(validate(h, c))

    def test_strong_loose_path(self):
        t = dfs_build(loose_path, 0)
        c = dfs_color_strong(loose_path, t, 5)
        self.assertTrue(validate(loose_path, c))
        # a special pair swaps the two colors right below its parent
        self.assertEqual((c[0], c[1], c[2]), (0, 1, 2))

    def test_strong_palette_too_small(self):
        t = dfs_build(loose_path, 0)
        with self.assertRaises(PaletteExceededError):
            dfs_color_strong(loose_path, t, 3)

    def test_weak_by_depth(self):
        t = dfs_build(k5_3, 0)
        c = dfs_color_weak(k5_3, t, 5)
        self.assertEqual(c.colors, tuple(t.depth[v] % 3 for v in range(5)))
        self.assertLessEqual(c.palette_size, 3)
        self.assertTrue(validate(k5_3, c))

    def test_tree_must_span(self):
        t = dfs_build(mixed, 0)
        with self.assertRaises(UsageException):
            dfs_color_strong(mixed, t, 5)
        with self.assertRaises(UsageException):
            dfs_color_weak(mixed, t, 5)


def _all_hypergraphs(n: int, sizes: Tuple[int, ...], m_max: int):
    candidates = [e for s in sizes for e in itertools.combinations(range(n), s)]
    for m in range(m_max + 1):
        for edges in itertools.combinations(candidates, m):
            yield Hypergraph(n, edges)


class ExhaustiveStructureTests(unittest.TestCase):
    """
    Every labeled hypergraph in a size class, DFS from vertex 0: up to
    relabeling this is every rooted hypergraph of the class.
    """

    def check(self, n: int, sizes: Tuple[int, ...], m_max: int) -> int:
        checked = 0
        for h in _all_hypergraphs(n, sizes, m_max):
            t = dfs_build(h, 0)
            self.assertEqual(special_pair_violations(h, t), [], h)
            checked += 1
        return checked

    def test_mixed_sizes_on_six_vertices(self):
        checked = self.check(6, (2, 3), 4)
        self.assertEqual(checked, sum(math.comb(35, m) for m in range(5)))

    def test_triples_on_six_vertices(self):
        checked = self.check(6, (3,), 6)
        self.assertEqual(checked, sum(math.comb(20, m) for m in range(7)))

    def test_triples_on_seven_vertices(self):
        checked = self.check(7, (3,), 4)
        self.assertEqual(checked, sum(math.comb(35, m) for m in range(5)))
