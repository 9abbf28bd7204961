from collections import deque
from functools import cached_property
import logging
from typing import FrozenSet, Iterable, Iterator, List, NamedTuple, Set, Tuple

import networkx as nx

from berge_coloring.budget import Budget, ensure_budget
from berge_coloring.exceptions import (
    InvalidHypergraphError,
    InvalidVertexError,
    UnsupportedParameterError,
)

logger = logging.getLogger("berge_coloring")

Edge = Tuple[int, ...]


class Hypergraph:
    def __init__(
        self, n: int, edges: Iterable[Iterable[int]] = (), r_max: int = None
    ):
        """
        Creates an immutable hypergraph on the vertices 0..n-1.

        Every edge is stored as a strictly increasing tuple. Edges keep the
        order in which they were given, so edge indices are stable.

        How to use:
        >>> from berge_coloring import Hypergraph
        >>> h = Hypergraph(5, [[2, 1, 0], [3, 4]])
        >>> h.edges
        ((0, 1, 2), (3, 4))
        >>> h.r_max
        3

        :param n: Number of vertices
        :param edges: Iterable of vertex id collections, each of size >= 2
        :param r_max: Maximum allowed edge size. Defaults to the largest edge
            size (or 2 for an edgeless hypergraph).
        :raises berge_coloring.exceptions.InvalidHypergraphError: If an edge
            is smaller than 2, larger than r_max, repeats a vertex, names a
            vertex outside 0..n-1 or duplicates an earlier edge.
        """
        if n < 0:
            raise InvalidHypergraphError(f"Vertex count must be >= 0, got {n}.")

        normalized = []
        seen = set()
        for idx, edge in enumerate(edges):
            e = tuple(sorted(edge))
            if len(e) < 2:
                raise InvalidHypergraphError(
                    f"Edge {idx} has {len(e)} vertices; edges need at least 2."
                )
            if len(set(e)) != len(e):
                raise InvalidHypergraphError(f"Edge {idx} repeats a vertex: {e}")
            if e[0] < 0 or e[-1] >= n:
                raise InvalidHypergraphError(
                    f"Edge {idx} {e} names a vertex outside 0..{n - 1}."
                )
            if e in seen:
                raise InvalidHypergraphError(f"Edge {idx} {e} is a duplicate.")
            seen.add(e)
            normalized.append(e)

        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(normalized)
        self.r_max = r_max if r_max is not None else max(self.rank, 2)

        if self.r_max < 2:
            raise InvalidHypergraphError(f"r_max must be >= 2, got {self.r_max}.")
        if self.rank > self.r_max:
            raise InvalidHypergraphError(
                f"Edge of size {self.rank} exceeds r_max={self.r_max}."
            )

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m}, r_max={self.r_max})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.edges, self.r_max) == (other.n, other.edges, other.r_max)

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.r_max))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def rank(self) -> int:
        """Size of the largest edge, 0 if there are no edges."""
        return max((len(e) for e in self.edges), default=0)

    def is_uniform(self, r: int = None) -> bool:
        """
        Whether all edges have size r (or all have one common size if r is
        None). Edgeless hypergraphs are uniform for every r.

        >>> Hypergraph(4, [(0, 1, 2), (1, 2, 3)]).is_uniform(3)
        True
        >>> Hypergraph(4, [(0, 1, 2), (2, 3)]).is_uniform()
        False
        """
        sizes = {len(e) for e in self.edges}
        if r is None:
            return len(sizes) <= 1
        return sizes <= {r}

    def check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise InvalidVertexError(v, self.n)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """For every vertex, the indices of the edges containing it."""
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v].append(idx)
        return tuple(tuple(i) for i in inc)

    @cached_property
    def shadow_graph(self) -> "ShadowGraph":
        return ShadowGraph.from_hypergraph(self)

    def restrict(self, vertices: Iterable[int]) -> "Restriction":
        """
        Truncates every edge to the given vertex set, i.e. deletes all other
        vertices one by one in the sense of delete_vertex(). Edges that shrink
        below two vertices are dropped, edges that become equal are merged
        (the first one wins).

        >>> h = Hypergraph(4, [(0, 1, 2), (0, 1, 3), (2, 3)])
        >>> r = h.restrict([0, 1])
        >>> r.hypergraph.edges, r.vertices, r.edge_origin
        (((0, 1),), (0, 1), (0,))
        """
        kept = sorted(set(vertices))
        index = {v: i for i, v in enumerate(kept)}
        edges = []
        origin = []
        seen = set()
        for idx, e in enumerate(self.edges):
            t = tuple(index[v] for v in e if v in index)
            if len(t) >= 2 and t not in seen:
                seen.add(t)
                edges.append(t)
                origin.append(idx)
        return Restriction(
            Hypergraph(len(kept), edges, r_max=self.r_max), tuple(kept), tuple(origin)
        )

    def induced(self, vertices: Iterable[int]) -> "Restriction":
        """
        Keeps only the edges lying completely inside the given vertex set.

        >>> r = Hypergraph(4, [(0, 1, 2), (0, 1, 3), (2, 3)]).induced([0, 1, 3])
        >>> r.hypergraph.edges, r.edge_origin
        (((0, 1, 2),), (1,))
        """
        kept = sorted(set(vertices))
        index = {v: i for i, v in enumerate(kept)}
        edges = []
        origin = []
        for idx, e in enumerate(self.edges):
            if all(v in index for v in e):
                edges.append(tuple(index[v] for v in e))
                origin.append(idx)
        return Restriction(
            Hypergraph(len(kept), edges, r_max=self.r_max), tuple(kept), tuple(origin)
        )


class Restriction(NamedTuple):
    """A derived hypergraph plus the maps back to its parent."""

    hypergraph: Hypergraph
    # new vertex id -> parent vertex id
    vertices: Tuple[int, ...]
    # new edge index -> parent edge index
    edge_origin: Tuple[int, ...]


class ShadowGraph:
    def __init__(self, n: int, adjacency: Iterable[Iterable[int]]):
        """
        The 2-shadow of a hypergraph: u and v are adjacent iff some edge
        contains both.

        :param n: Number of vertices
        :param adjacency: For every vertex, its neighbors
        """
        self.n = n
        self.adjacency: Tuple[FrozenSet[int], ...] = tuple(
            frozenset(a) for a in adjacency
        )

    @classmethod
    def from_hypergraph(cls, h: Hypergraph) -> "ShadowGraph":
        adjacency: List[Set[int]] = [set() for _ in range(h.n)]
        for e in h.edges:
            for i, u in enumerate(e):
                for v in e[i + 1 :]:
                    adjacency[u].add(v)
                    adjacency[v].add(u)
        return cls(h.n, adjacency)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in sorted(nbrs):
                if u < v:
                    yield u, v

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


class DegreeProfile(NamedTuple):
    # number of edges containing v
    d: int
    # |N_H(v)|
    d_N: int
    # maximum number of pairwise disjoint link edges
    d_M: int


class Link(NamedTuple):
    hypergraph: Hypergraph
    # link vertex id -> vertex id in the parent
    vertices: Tuple[int, ...]
    # partners of v in size-2 edges; these are not link edges
    singletons: Tuple[int, ...]


class PeelResult(NamedTuple):
    order: Tuple[int, ...]
    core: Hypergraph
    # core vertex id -> input vertex id
    vertices: Tuple[int, ...]
    # core edge index -> input edge index
    edge_origin: Tuple[int, ...]


def shadow(h: Hypergraph) -> ShadowGraph:
    """
    Returns the shadow graph of h. The strong chromatic number of h equals
    the chromatic number of its shadow.

    >>> sorted(shadow(Hypergraph(3, [(0, 1, 2)])).edges())
    [(0, 1), (0, 2), (1, 2)]
    """
    return h.shadow_graph


def link(h: Hypergraph, v: int) -> Link:
    """
    Builds the link hypergraph of v on the vertex set N_H(v), re-indexed in
    increasing order of the parent ids. Size-2 edges through v would leave a
    single vertex behind; those partners are reported as singletons instead.

    >>> lk = link(Hypergraph(5, [(0, 1, 2), (0, 3, 4)]), 0)
    >>> lk.hypergraph.edges, lk.vertices
    (((0, 1), (2, 3)), (1, 2, 3, 4))

    :raises berge_coloring.exceptions.InvalidVertexError: If v is out of range
    """
    h.check_vertex(v)
    nbrs = sorted(h.shadow_graph.neighbors(v))
    index = {u: i for i, u in enumerate(nbrs)}
    edges = []
    singletons = []
    for idx in h.incidence[v]:
        e = h.edges[idx]
        rest = tuple(index[u] for u in e if u != v)
        if len(rest) >= 2:
            edges.append(rest)
        else:
            singletons.append(nbrs[rest[0]])
    link_h = Hypergraph(len(nbrs), edges, r_max=max(2, h.r_max - 1))
    return Link(link_h, tuple(nbrs), tuple(sorted(singletons)))


def max_disjoint_edges(edges: Iterable[Iterable[int]], budget: Budget = None) -> int:
    """
    Size of a largest set of pairwise disjoint edges, by branching on the
    smallest remaining edge (take it or skip it).

    >>> max_disjoint_edges([(0, 1), (1, 2), (2, 3), (0, 3)])
    2
    """
    budget = ensure_budget(budget)
    pool = sorted({tuple(sorted(e)) for e in edges})
    min_size = min((len(e) for e in pool), default=2)
    best = 0

    def search(i: int, used: FrozenSet[int], size: int):
        nonlocal best
        budget.spend()
        best = max(best, size)
        usable = [e for e in pool[i:] if used.isdisjoint(e)]
        if not usable:
            return
        free = {x for e in usable for x in e}
        if size + min(len(usable), len(free) // min_size) <= best:
            return
        head = usable[0]
        j = pool.index(head, i)
        search(j + 1, used.union(head), size + 1)
        search(j + 1, used, size)

    search(0, frozenset(), 0)
    return best


def degrees(h: Hypergraph, v: int, budget: Budget = None) -> DegreeProfile:
    """
    Computes d(v), d^N(v) and d^M(v).

    >>> degrees(Hypergraph(5, [(0, 1, 2), (0, 3, 4)]), 0)
    DegreeProfile(d=2, d_N=4, d_M=2)

    :raises berge_coloring.exceptions.InvalidVertexError: If v is out of range
    """
    h.check_vertex(v)
    link_edges = [
        tuple(u for u in h.edges[idx] if u != v)
        for idx in h.incidence[v]
        if len(h.edges[idx]) >= 3
    ]
    return DegreeProfile(
        d=len(h.incidence[v]),
        d_N=h.shadow_graph.degree(v),
        d_M=max_disjoint_edges(link_edges, budget),
    )


def delete_vertex(h: Hypergraph, u: int) -> Restriction:
    """
    Returns H minus u: u is removed from every edge, edges shrinking to a
    single vertex are dropped and duplicates are merged. Vertices above u
    move down by one; the restriction carries the id map.

    >>> delete_vertex(Hypergraph(3, [(0, 1), (0, 1, 2)]), 2).hypergraph.edges
    ((0, 1),)

    :raises berge_coloring.exceptions.InvalidVertexError: If u is out of range
    """
    h.check_vertex(u)
    return h.restrict(v for v in range(h.n) if v != u)


def components(h: Hypergraph) -> List[Set[int]]:
    """
    Connected components of the shadow, ordered by their smallest vertex.
    Isolated vertices form their own components.

    >>> components(Hypergraph(5, [(0, 1, 2), (3, 4)]))
    [{0, 1, 2}, {3, 4}]
    """
    graph = h.shadow_graph.to_networkx()
    return sorted((set(c) for c in nx.connected_components(graph)), key=min)


def peel(h: Hypergraph, threshold: int) -> PeelResult:
    """
    Repeatedly removes a vertex with fewer than `threshold` neighbors among
    the remaining vertices. Neighborhoods are taken in the shadow restricted
    to the surviving vertices, which is the shadow of H with the removed
    vertices deleted. Vertices are queued in id order first, then in the
    order their degree drops below the threshold.

    The core is the truncation of H to the survivors; every core vertex has
    at least `threshold` neighbors in it.

    >>> res = peel(Hypergraph(5, [(0, 1, 2), (0, 3, 4)]), 3)
    >>> res.order, res.core.n
    ((1, 2, 3, 4, 0), 0)

    :param threshold: Peel vertices whose neighborhood is smaller than this
    :raises berge_coloring.exceptions.UnsupportedParameterError: If
        threshold < 1
    """
    if threshold < 1:
        raise UnsupportedParameterError(
            f"Peeling threshold must be >= 1, got {threshold}."
        )

    adjacency = h.shadow_graph.adjacency
    degree = [len(a) for a in adjacency]
    removed = [False] * h.n
    queued = [False] * h.n
    queue = deque()
    for v in range(h.n):
        if degree[v] < threshold:
            queued[v] = True
            queue.append(v)

    order = []
    while queue:
        v = queue.popleft()
        removed[v] = True
        order.append(v)
        for w in sorted(adjacency[v]):
            if removed[w]:
                continue
            degree[w] -= 1
            if not queued[w] and degree[w] < threshold:
                queued[w] = True
                queue.append(w)

    survivors = [v for v in range(h.n) if not removed[v]]
    restriction = h.restrict(survivors)
    logger.debug(
        f"Peeled {len(order)} of {h.n} vertices at threshold {threshold}; "
        f"core has {restriction.hypergraph.n} vertices"
    )
    return PeelResult(
        tuple(order),
        restriction.hypergraph,
        restriction.vertices,
        restriction.edge_origin,
    )
