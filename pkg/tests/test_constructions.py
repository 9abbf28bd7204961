from collections import Counter
import itertools
import math
import unittest

from berge_coloring import Hypergraph, PatternGraph
from berge_coloring.constructions import (
    complete_r_graph,
    disjoint_union,
    expansion,
    fano,
    is_prime,
    named_tree,
    projective_plane,
    random_hypergraph,
    skplus_lower_bound,
    steiner_triple,
    suspension,
)
from berge_coloring.detect import is_skplus_free
from berge_coloring.exceptions import (
    InvalidPatternError,
    UnsupportedParameterError,
)

from .data.hypergraphs import k5_3, three_k5


def pair_counts(h: Hypergraph) -> Counter:
    return Counter(
        pair for e in h.edges for pair in itertools.combinations(sorted(e), 2)
    )


class ProjectivePlaneTests(unittest.TestCase):
    def test_prime_orders(self):
        for q in (2, 3, 5):
            plane = projective_plane(q)
            h = plane.to_hypergraph()
            n = q * q + q + 1
            self.assertEqual((h.n, h.m), (n, n))
            self.assertTrue(h.is_uniform(q + 1))
            counts = pair_counts(h)
            self.assertEqual(len(counts), n * (n - 1) // 2)
            self.assertEqual(set(counts.values()), {1})

    def test_non_prime(self):
        self.assertFalse(is_prime(4))
        for q in (0, 1, 4, 6):
            with self.assertRaises(UnsupportedParameterError):
                projective_plane(q)

    def test_fano(self):
        h = fano()
        self.assertEqual((h.n, h.m, h.rank), (7, 7, 3))
        # every point on three lines
        self.assertEqual({len(lines) for lines in h.incidence}, {3})


class SkPlusTests(unittest.TestCase):
    def test_order_two(self):
        c = skplus_lower_bound(2)
        h = c.hypergraph
        self.assertEqual(h.n, 21)
        self.assertTrue(h.is_uniform(3))
        self.assertEqual(len(c.clique), 14)
        for u, v in itertools.combinations(c.clique, 2):
            self.assertTrue(h.shadow_graph.has_edge(u, v), (u, v))

        self.assertTrue(is_skplus_free(h, 4))
        self.assertFalse(is_skplus_free(h, 3))


class SteinerTripleTests(unittest.TestCase):
    def test_pairs_covered_once(self):
        for n in (3, 9, 15):
            h = steiner_triple(n)
            self.assertEqual(h.m, n * (n - 1) // 6)
            counts = pair_counts(h)
            self.assertEqual(len(counts), n * (n - 1) // 2)
            self.assertEqual(set(counts.values()), {1})

    def test_unsupported_orders(self):
        for n in (0, 6, 7, 13):
            with self.assertRaises(UnsupportedParameterError):
                steiner_triple(n)


class ExpansionTests(unittest.TestCase):
    def setUp(self):
        self.f = PatternGraph(3, [(0, 1), (1, 2)])

    def test_expansion(self):
        h = expansion(self.f, 4)
        self.assertEqual(h.n, 7)
        self.assertEqual(h.edges, ((0, 1, 3, 4), (1, 2, 5, 6)))

    def test_suspension(self):
        h = suspension(self.f, 3)
        self.assertEqual(h.n, 4)
        self.assertEqual(h.edges, ((0, 1, 3), (1, 2, 3)))

    def test_counts_on_every_small_pattern(self):
        """All simple graphs on at most six vertices, ranks three and four"""
        patterns = 0
        for n in range(1, 7):
            pairs = list(itertools.combinations(range(n), 2))
            for mask in range(2 ** len(pairs)):
                chosen = [p for i, p in enumerate(pairs) if mask >> i & 1]
                f = PatternGraph(n, chosen)
                patterns += 1
                for r in (3, 4):
                    h = expansion(f, r)
                    self.assertEqual((h.n, h.m), (n + (r - 2) * f.m, f.m), chosen)
                    self.assertTrue(f.m == 0 or h.is_uniform(r), chosen)
                    h = suspension(f, r)
                    self.assertEqual((h.n, h.m), (n + r - 2, f.m), chosen)
        self.assertEqual(patterns, sum(2 ** math.comb(n, 2) for n in range(1, 7)))

    def test_rank_too_small(self):
        with self.assertRaises(UnsupportedParameterError):
            expansion(self.f, 2)
        with self.assertRaises(UnsupportedParameterError):
            suspension(self.f, 2)


class GeneratorTests(unittest.TestCase):
    def test_complete_r_graph(self):
        self.assertEqual(complete_r_graph(6, 3).m, 20)
        self.assertEqual(complete_r_graph(4, 4).edges, ((0, 1, 2, 3),))
        with self.assertRaises(UnsupportedParameterError):
            complete_r_graph(3, 4)
        with self.assertRaises(UnsupportedParameterError):
            complete_r_graph(3, 1)

    def test_named_tree(self):
        self.assertEqual(named_tree("path:3").m, 3)
        self.assertEqual(named_tree("broom:2,3").m, 5)
        for spec in ("cycle:3", "clique:3", "path:x", "tree:3"):
            with self.assertRaises(InvalidPatternError, msg=spec):
                named_tree(spec)

    def test_disjoint_union(self):
        self.assertEqual((three_k5.n, three_k5.m), (15, 30))
        self.assertIn((10, 11, 12), three_k5.edges)
        self.assertEqual(disjoint_union([]).n, 0)
        self.assertEqual(disjoint_union([Hypergraph(2), k5_3]).edges[0], (2, 3, 4))

    def test_random_is_seeded(self):
        a = random_hypergraph(10, 12, 3, seed=7)
        self.assertEqual(a, random_hypergraph(10, 12, 3, seed=7))
        self.assertEqual(a.m, 12)
        self.assertEqual(list(a.edges), sorted(a.edges))

    def test_random_uniform(self):
        # dense enough to sample from the full candidate list
        h = random_hypergraph(6, 15, 3, uniform=True, seed=1)
        self.assertTrue(h.is_uniform(3))
        # sparse enough for rejection sampling
        h = random_hypergraph(30, 10, 4, uniform=True, seed=1)
        self.assertTrue(h.is_uniform(4))

    def test_random_rejects(self):
        with self.assertRaises(UnsupportedParameterError):
            random_hypergraph(4, 5, 3, uniform=True)
        with self.assertRaises(UnsupportedParameterError):
            random_hypergraph(4, 1, 1)
