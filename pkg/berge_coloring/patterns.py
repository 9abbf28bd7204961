import logging
from typing import Iterable, List, Tuple

import networkx as nx

from berge_coloring.exceptions import InvalidPatternError

logger = logging.getLogger("berge_coloring")

PatternEdge = Tuple[int, int]


class PatternGraph:
    def __init__(self, n: int, edges: Iterable[Iterable[int]] = (), name: str = None):
        """
        A small graph F whose Berge copies are searched for in hypergraphs.

        Edges are stored as (min, max) pairs in the given order. Parallel
        edges are allowed so that a Berge 2-cycle can be described; loops
        are not.

        >>> p = PatternGraph(3, [(1, 0), (1, 2)])
        >>> p.edges, p.max_degree
        (((0, 1), (1, 2)), 2)

        :param n: Number of vertices
        :param edges: Vertex pairs
        :param name: Optional named-pattern spec this graph was built from
        :raises berge_coloring.exceptions.InvalidPatternError: If an edge is
            not a pair of distinct vertices in 0..n-1
        """
        if n < 0:
            raise InvalidPatternError(f"Vertex count must be >= 0, got {n}.")

        normalized: List[PatternEdge] = []
        for idx, edge in enumerate(edges):
            pair = tuple(edge)
            if len(pair) != 2:
                raise InvalidPatternError(f"Pattern edge {idx} is not a pair: {pair}")
            u, v = sorted(pair)
            if u == v:
                raise InvalidPatternError(f"Pattern edge {idx} is a loop at {u}.")
            if u < 0 or v >= n:
                raise InvalidPatternError(
                    f"Pattern edge {idx} ({u}, {v}) names a vertex outside "
                    f"0..{n - 1}."
                )
            normalized.append((u, v))

        self.n = n
        self.edges: Tuple[PatternEdge, ...] = tuple(normalized)
        self.name = name

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<PatternGraph{label} n={self.n} m={self.m}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PatternGraph):
            return NotImplemented
        return (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)

    @property
    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def neighbors(self, v: int) -> List[int]:
        """Neighbors of v in edge order, repeated once per parallel edge."""
        out = []
        for u, w in self.edges:
            if u == v:
                out.append(w)
            elif w == v:
                out.append(u)
        return out

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def is_forest(self) -> bool:
        """
        >>> path(3).is_forest(), cycle(3).is_forest(), cycle(2).is_forest()
        (True, False, False)
        """
        if len(set(self.edges)) != len(self.edges):
            return False
        g = self.to_networkx()
        return self.m == self.n - nx.number_connected_components(g)

    def to_line(self) -> str:
        """
        Serializes into the one-line `pg` format.

        >>> star(2).to_line()
        'pg 3 0-1 0-2'
        """
        pairs = " ".join(f"{u}-{v}" for u, v in self.edges)
        return f"pg {self.n} {pairs}".rstrip()


def _positive(value: int, what: str, minimum: int = 1):
    if value < minimum:
        raise InvalidPatternError(f"{what} must be >= {minimum}, got {value}.")


def path(k: int) -> PatternGraph:
    """P_k: the path with k edges on the vertices 0..k."""
    _positive(k, "Path length", 0)
    return PatternGraph(k + 1, [(i, i + 1) for i in range(k)], name=f"path:{k}")


def cycle(k: int) -> PatternGraph:
    """
    C_k on the vertices 0..k-1. cycle(2) is a pair of parallel edges.

    >>> cycle(4).edges
    ((0, 1), (1, 2), (2, 3), (0, 3))
    """
    _positive(k, "Cycle length", 2)
    edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
    return PatternGraph(k, edges, name=f"cycle:{k}")


def star(k: int) -> PatternGraph:
    """S_k: center 0 with leaves 1..k."""
    _positive(k, "Star size", 0)
    return PatternGraph(k + 1, [(0, i) for i in range(1, k + 1)], name=f"star:{k}")


def spider(k: int) -> PatternGraph:
    """
    k legs of length two hanging off center 0.

    >>> spider(2).edges
    ((0, 1), (1, 2), (0, 3), (3, 4))
    """
    _positive(k, "Spider leg count")
    edges = []
    for i in range(1, k + 1):
        edges += [(0, 2 * i - 1), (2 * i - 1, 2 * i)]
    return PatternGraph(2 * k + 1, edges, name=f"spider:{k}")


def double_star(t: int, k: int) -> PatternGraph:
    """
    An S_{t+1} and an S_{k+1} sharing one edge: centers 0 and 1, t leaves
    on 0 and k leaves on 1.

    >>> g = double_star(1, 2)
    >>> g.n, g.m
    (5, 4)
    """
    _positive(t, "Double star parameter t")
    _positive(k, "Double star parameter k")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(t)]
    edges += [(1, 2 + t + i) for i in range(k)]
    return PatternGraph(t + k + 2, edges, name=f"dstar:{t},{k}")


def broom(t: int, k: int) -> PatternGraph:
    """
    A path 0..t whose endpoint t is the center of a star with k leaves.

    >>> g = broom(2, 2)
    >>> g.n, g.m, g.edges
    (5, 4, ((0, 1), (1, 2), (2, 3), (2, 4)))
    """
    _positive(t, "Broom handle length", 2)
    _positive(k, "Broom star size", 2)
    edges = [(i, i + 1) for i in range(t)]
    edges += [(t, t + 1 + i) for i in range(k)]
    return PatternGraph(t + k + 1, edges, name=f"broom:{t},{k}")


def clique(k: int) -> PatternGraph:
    """K_k."""
    _positive(k, "Clique size")
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    return PatternGraph(k, edges, name=f"clique:{k}")


_BUILDERS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "spider": (spider, 1),
    "clique": (clique, 1),
    "dstar": (double_star, 2),
    "broom": (broom, 2),
}


def _parse_ints(text: str, spec: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InvalidPatternError(f"Bad parameters in pattern spec {spec!r}.")


def named_pattern(spec: str) -> PatternGraph:
    """
    Builds a named pattern such as `path:4`, `star:3`, `spider:2`,
    `dstar:1,2`, `broom:2,3`, `cycle:5` or `clique:4`.

    >>> named_pattern("star:3").edges
    ((0, 1), (0, 2), (0, 3))

    :raises berge_coloring.exceptions.InvalidPatternError: For unknown names
        or bad parameters
    """
    name, sep, params = spec.strip().partition(":")
    if not sep or name not in _BUILDERS:
        raise InvalidPatternError(f"Unknown pattern spec {spec!r}.")
    builder, arity = _BUILDERS[name]
    args = _parse_ints(params, spec)
    if len(args) != arity:
        raise InvalidPatternError(
            f"Pattern {name!r} takes {arity} parameter(s), got {len(args)}."
        )
    return builder(*args)


def parse_pattern_line(line: str) -> PatternGraph:
    """
    Parses the one-line format `pg <n> <u-v> <u-v> ...`.

    >>> parse_pattern_line("pg 3 0-1 1-2").edges
    ((0, 1), (1, 2))
    """
    tokens = line.split()
    if len(tokens) < 2 or tokens[0] != "pg":
        raise InvalidPatternError(f"Expected 'pg <n> <u-v>...', got {line!r}.")
    try:
        n = int(tokens[1])
        edges = [tuple(int(x) for x in tok.split("-")) for tok in tokens[2:]]
    except ValueError:
        raise InvalidPatternError(f"Malformed pattern line {line!r}.")
    return PatternGraph(n, edges)


def parse_pattern(spec: str) -> PatternGraph:
    """Accepts either a named pattern or a `pg` line."""
    if spec.strip().startswith("pg"):
        return parse_pattern_line(spec)
    return named_pattern(spec)
