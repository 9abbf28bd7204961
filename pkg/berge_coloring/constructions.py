"""
Generators for the hypergraphs that show the coloring bounds are sharp, plus
seeded random instances.
"""
from dataclasses import dataclass
import itertools
import logging
import math
import random
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from berge_coloring.exceptions import (
    ConstructionError,
    InvalidPatternError,
    NotAForestError,
    UnsupportedParameterError,
)
from berge_coloring.hypergraph import Hypergraph
from berge_coloring.patterns import PatternGraph, named_pattern

logger = logging.getLogger("berge_coloring")

TREE_NAMES = ("path", "star", "spider", "dstar", "broom")


def is_prime(q: int) -> bool:
    """
    >>> [p for p in range(12) if is_prime(p)]
    [2, 3, 5, 7, 11]
    """
    if q < 2:
        return False
    return all(q % d for d in range(2, math.isqrt(q) + 1))


def _assert_pairs_covered_once(
    n: int, blocks: Iterable[Sequence[int]], what: str
):
    seen: Dict[Tuple[int, int], int] = {}
    for b in blocks:
        for pair in itertools.combinations(sorted(b), 2):
            seen[pair] = seen.get(pair, 0) + 1
    missing = n * (n - 1) // 2 - len(seen)
    repeated = [pair for pair, count in seen.items() if count > 1]
    if missing or repeated:
        raise ConstructionError(
            f"{what}: {missing} pairs uncovered, {len(repeated)} covered twice"
        )


def complete_r_graph(n: int, r: int) -> Hypergraph:
    """
    All r-subsets of n vertices.

    >>> complete_r_graph(5, 3).m
    10

    :raises berge_coloring.exceptions.UnsupportedParameterError: Unless
        2 <= r <= n
    """
    if not 2 <= r <= n:
        raise UnsupportedParameterError(
            f"complete_r_graph needs 2 <= r <= n, got n={n}, r={r}"
        )
    return Hypergraph(n, itertools.combinations(range(n), r), r_max=r)


def expansion(f: PatternGraph, r: int) -> Hypergraph:
    """
    Enlarges every edge of f by r-2 fresh vertices of its own. The original
    vertices keep their ids; the fresh vertices of edge i follow them in
    edge order.

    >>> expansion(PatternGraph(3, [(0, 1), (0, 2)]), 3).edges
    ((0, 1, 3), (0, 2, 4))
    """
    if r < 3:
        raise UnsupportedParameterError(f"Expansions need r >= 3, got {r}")
    extra = r - 2
    edges = [
        (u, v) + tuple(f.n + i * extra + j for j in range(extra))
        for i, (u, v) in enumerate(f.edges)
    ]
    return Hypergraph(f.n + extra * f.m, edges, r_max=r)


def suspension(f: PatternGraph, r: int) -> Hypergraph:
    """
    Adds the same r-2 apex vertices (ids f.n .. f.n+r-3) to every edge of f.

    >>> suspension(PatternGraph(3, [(0, 1), (1, 2)]), 4).edges
    ((0, 1, 3, 4), (1, 2, 3, 4))
    """
    if r < 3:
        raise UnsupportedParameterError(f"Suspensions need r >= 3, got {r}")
    apexes = tuple(range(f.n, f.n + r - 2))
    return Hypergraph(f.n + r - 2, [e + apexes for e in f.edges], r_max=r)


@dataclass(frozen=True)
class ProjectivePlane:
    order: int
    # homogeneous coordinates, normalized so the first nonzero entry is 1
    points: Tuple[Tuple[int, int, int], ...]
    # point ids on each line
    lines: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.points)

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.size, self.lines, r_max=self.order + 1)


def _normalized_vectors(q: int) -> List[Tuple[int, int, int]]:
    vectors = [(1, y, z) for y in range(q) for z in range(q)]
    vectors += [(0, 1, z) for z in range(q)]
    vectors.append((0, 0, 1))
    return vectors


def projective_plane(q: int) -> ProjectivePlane:
    """
    The projective plane over the integers mod a prime q. Points and lines
    are both the normalized nonzero vectors of GF(q)^3; a point lies on a
    line iff their dot product vanishes.

    >>> plane = projective_plane(2)
    >>> plane.size, len(plane.lines), {len(line) for line in plane.lines}
    (7, 7, {3})

    :raises berge_coloring.exceptions.UnsupportedParameterError: If q is not
        prime
    :raises berge_coloring.exceptions.ConstructionError: If the incidence
        structure is not a projective plane
    """
    if not is_prime(q):
        raise UnsupportedParameterError(f"Only prime orders are supported, got {q}")

    points = _normalized_vectors(q)
    lines = []
    for a in points:
        lines.append(
            tuple(
                i
                for i, p in enumerate(points)
                if (a[0] * p[0] + a[1] * p[1] + a[2] * p[2]) % q == 0
            )
        )

    n = q * q + q + 1
    if len(points) != n or len(lines) != n:
        raise ConstructionError(f"Plane of order {q} has wrong point/line counts")
    if any(len(line) != q + 1 for line in lines):
        raise ConstructionError(f"Plane of order {q} has a line without {q + 1} points")
    _assert_pairs_covered_once(n, lines, f"Projective plane of order {q}")

    logger.debug(f"Built projective plane of order {q} with {n} points")
    return ProjectivePlane(q, tuple(points), tuple(lines))


def fano() -> Hypergraph:
    """The projective plane of order 2 as a 3-uniform hypergraph."""
    return projective_plane(2).to_hypergraph()


class SkPlusConstruction(NamedTuple):
    hypergraph: Hypergraph
    # vertices that are pairwise adjacent in the shadow
    clique: Tuple[int, ...]
    order: int


def skplus_lower_bound(q: int) -> SkPlusConstruction:
    """
    Two copies of the projective plane of order q (point ids 0..N-1 and
    N..2N-1, N = q^2+q+1) and one extra vertex u_i = 2N+i per line. For
    every line, u_i forms a triple with every pair of points on the line in
    either copy.

    All 2N plane vertices are pairwise adjacent in the shadow. The largest
    set of triples meeting exactly in one vertex has q+1 triples, so the
    result avoids S_{q+2}^+ but contains S_{q+1}^+.

    >>> c = skplus_lower_bound(2)
    >>> c.hypergraph.n, len(c.clique)
    (21, 14)
    """
    plane = projective_plane(q)
    n = plane.size
    edges = []
    for i, line in enumerate(plane.lines):
        block = list(line) + [n + p for p in line]
        edges += [(2 * n + i, x, y) for x, y in itertools.combinations(block, 2)]
    h = Hypergraph(3 * n, edges, r_max=3)
    return SkPlusConstruction(h, tuple(range(2 * n)), q)


def steiner_triple(n: int) -> Hypergraph:
    """
    Bose's Steiner triple system on n = 3v vertices, n = 3 mod 6. Vertex
    (x, i) with x in Z_v and i in Z_3 gets id i*v + x. Triples are
    {(x,0), (x,1), (x,2)} and {(x,i), (y,i), (x o y, i+1)} for x < y, with
    the idempotent commutative quasigroup x o y = (x+y)(v+1)/2 mod v.

    >>> steiner_triple(9).m
    12

    :raises berge_coloring.exceptions.UnsupportedParameterError: Unless
        n = 3 mod 6
    """
    if n < 3 or n % 6 != 3:
        raise UnsupportedParameterError(
            f"Steiner triple systems are generated for n = 3 mod 6, got {n}"
        )
    v = n // 3
    half = (v + 1) // 2

    def vid(x: int, i: int) -> int:
        return (i % 3) * v + x

    triples = [(vid(x, 0), vid(x, 1), vid(x, 2)) for x in range(v)]
    for x, y in itertools.combinations(range(v), 2):
        z = (x + y) * half % v
        for i in range(3):
            triples.append((vid(x, i), vid(y, i), vid(z, i + 1)))

    if len(triples) != n * (n - 1) // 6:
        raise ConstructionError(f"Steiner triple system on {n} has wrong size")
    _assert_pairs_covered_once(n, triples, f"Steiner triple system on {n}")
    return Hypergraph(n, triples, r_max=3)


def named_tree(spec: str) -> PatternGraph:
    """
    Builds one of the named trees: `path:k`, `star:k`, `spider:k`,
    `dstar:t,k` or `broom:t,k`.

    >>> g = named_tree("spider:2")
    >>> g.n, g.m, g.max_degree
    (5, 4, 2)

    :raises berge_coloring.exceptions.InvalidPatternError: For other names or
        bad parameters
    """
    name = spec.partition(":")[0].strip()
    if name not in TREE_NAMES:
        raise InvalidPatternError(f"{spec!r} does not name a tree")
    tree = named_pattern(spec)
    if not tree.is_forest():
        raise NotAForestError()
    return tree


def disjoint_union(hypergraphs: Iterable[Hypergraph]) -> Hypergraph:
    """
    Places the hypergraphs side by side, shifting the ids of each one past
    the previous ones.

    >>> disjoint_union([complete_r_graph(5, 3)] * 2).m
    20
    """
    n = 0
    r_max = 2
    edges: List[Tuple[int, ...]] = []
    for h in hypergraphs:
        edges += [tuple(v + n for v in e) for e in h.edges]
        n += h.n
        r_max = max(r_max, h.r_max)
    return Hypergraph(n, edges, r_max=r_max)


def random_hypergraph(
    n: int, m: int, r_max: int, uniform: bool = False, seed: int = 0
) -> Hypergraph:
    """
    Samples m distinct hyperedges uniformly among all subsets of size r_max
    (uniform) or of size 2..r_max. The same arguments always give the same
    hypergraph. Edges are sorted.

    :raises berge_coloring.exceptions.UnsupportedParameterError: If fewer
        than m candidate edges exist
    """
    if r_max < 2 or n < 0 or m < 0:
        raise UnsupportedParameterError(f"Bad random_hypergraph({n}, {m}, {r_max})")
    sizes = [r_max] if uniform else list(range(2, r_max + 1))
    weights = [math.comb(n, s) for s in sizes]
    available = sum(weights)
    if m > available:
        raise UnsupportedParameterError(
            f"Only {available} distinct edges exist, {m} requested"
        )

    rng = random.Random(seed)
    if available <= 4 * m:
        candidates = [
            e for s in sizes for e in itertools.combinations(range(n), s)
        ]
        chosen = rng.sample(candidates, m)
    else:
        picked = set()
        while len(picked) < m:
            s = rng.choices(sizes, weights=weights)[0]
            picked.add(tuple(sorted(rng.sample(range(n), s))))
        chosen = list(picked)

    return Hypergraph(n, sorted(chosen), r_max=r_max)
