"""
Berge-F detection.

A hypergraph H contains a Berge copy of a graph F if the vertices of F can be
mapped injectively into H and the edges of F injectively onto hyperedges of
H so that every edge of F lies inside its hyperedge. Deciding this is
NP-hard in general; every exhaustive search here spends nodes from a Budget
and aborts with BudgetExceededError once it is used up.
"""
from collections import deque
import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Set, Tuple

import networkx as nx

from berge_coloring.bounds import tree_threshold
from berge_coloring.budget import Budget, ensure_budget
from berge_coloring.exceptions import (
    NotAForestError,
    NotUniformError,
    UnsupportedParameterError,
)
from berge_coloring.hypergraph import Hypergraph, degrees
from berge_coloring.patterns import PatternGraph

logger = logging.getLogger("berge_coloring")

EXHAUSTIVE = "exhaustive"
GREEDY = "greedy"
INCOMPLETE = "incomplete-search"


class BergeWitness(NamedTuple):
    # F vertex -> H vertex
    vertex_map: Tuple[int, ...]
    # F edge index -> H edge index
    edge_map: Tuple[int, ...]
    search: str = EXHAUSTIVE


class _PairIndex:
    """Hyperedges containing a given pair of vertices, computed on demand."""

    def __init__(self, h: Hypergraph):
        self._incidence = h.incidence
        self._cache: Dict[Tuple[int, int], List[int]] = {}

    def __call__(self, a: int, b: int) -> List[int]:
        key = (a, b) if a < b else (b, a)
        if key not in self._cache:
            common = set(self._incidence[a]).intersection(self._incidence[b])
            self._cache[key] = sorted(common)
        return self._cache[key]


def assign_edges(candidates: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """
    Finds a system of distinct representatives as a maximum matching between
    pattern edges and hyperedges: one hyperedge per pattern edge, all
    different, each taken from its candidate list. Returns None if there is
    none.

    >>> assign_edges([[0, 1], [0]])
    [1, 0]
    >>> assign_edges([[0], [0]]) is None
    True
    """
    if not candidates:
        return []
    top = [("f", i) for i in range(len(candidates))]
    graph = nx.Graph()
    graph.add_nodes_from(top)
    graph.add_edges_from(
        (("f", i), ("h", e)) for i, options in enumerate(candidates) for e in options
    )
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    if any(node not in matching for node in top):
        return None
    return [matching[node][1] for node in top]


def _search_order(f: PatternGraph) -> Tuple[List[int], List[Optional[int]]]:
    """
    Orders the pattern vertices so that each one (after the first of its
    component) has a placed neighbor: most placed neighbors first, then
    highest degree, then lowest id. Also returns each vertex's first placed
    neighbor, whose image its candidates are drawn around.
    """
    nbrs = [set(f.neighbors(v)) for v in range(f.n)]
    deg = [f.degree(v) for v in range(f.n)]
    order: List[int] = []
    anchor: List[Optional[int]] = [None] * f.n
    placed: Set[int] = set()

    while len(order) < f.n:
        v = min(
            (v for v in range(f.n) if v not in placed),
            key=lambda v: (-len(nbrs[v] & placed), -deg[v], v),
        )
        anchor[v] = next((u for u in order if u in nbrs[v]), None)
        order.append(v)
        placed.add(v)
    return order, anchor


def contains_berge(
    h: Hypergraph, f: PatternGraph, budget: Budget = None
) -> Optional[BergeWitness]:
    """
    Searches for a Berge copy of f in h.

    Pattern vertices are placed one at a time onto host vertices (lowest id
    first). After each placement the pattern edges with both ends placed must
    still admit distinct hyperedges; this is checked with a bipartite
    matching between those edges and the hyperedges containing their images.

    >>> from berge_coloring.constructions import complete_r_graph
    >>> from berge_coloring.patterns import path
    >>> contains_berge(complete_r_graph(4, 3), path(4)) is None
    True
    >>> h = complete_r_graph(4, 3)
    >>> verify_witness(h, path(3), contains_berge(h, path(3)))
    True

    :param h: Host hypergraph
    :param f: Pattern graph
    :param budget: Node budget for this call
    :return: A witness or None if there is no Berge copy
    :raises berge_coloring.exceptions.BudgetExceededError: If the budget is
        used up before the search completes
    """
    budget = ensure_budget(budget)
    if f.n > h.n or f.m > h.m:
        return None
    if f.m == 0:
        return BergeWitness(tuple(range(f.n)), ())

    order, anchor = _search_order(f)
    position = {v: i for i, v in enumerate(order)}
    closing: List[List[int]] = [[] for _ in order]
    for idx, (u, v) in enumerate(f.edges):
        closing[max(position[u], position[v])].append(idx)

    adjacency = h.shadow_graph.adjacency
    needed = [len(set(f.neighbors(v))) for v in range(f.n)]
    pair_edges = _PairIndex(h)
    image: List[Optional[int]] = [None] * f.n
    used: Set[int] = set()
    placed_edges: List[int] = []

    def search(i: int) -> Optional[List[int]]:
        x = order[i]
        if anchor[x] is None:
            pool = range(h.n)
        else:
            pool = sorted(adjacency[image[anchor[x]]])

        for y in pool:
            if y in used or len(adjacency[y]) < needed[x]:
                continue
            budget.spend()
            image[x] = y
            edges = placed_edges + closing[i]
            candidates = [pair_edges(image[u], image[v]) for u, v in
                          (f.edges[j] for j in edges)]
            if not all(candidates):
                continue
            assignment = assign_edges(candidates)
            if assignment is None:
                continue
            if i + 1 == len(order):
                return [e for _, e in sorted(zip(edges, assignment))]

            used.add(y)
            placed_edges.extend(closing[i])
            found = search(i + 1)
            if found is not None:
                return found
            del placed_edges[len(placed_edges) - len(closing[i]) :]
            used.discard(y)

        image[x] = None
        return None

    edge_map = search(0)
    if edge_map is None:
        return None
    return BergeWitness(tuple(image), tuple(edge_map))


def verify_witness(h: Hypergraph, f: PatternGraph, w: BergeWitness) -> bool:
    """
    Checks a witness against both of its invariants: the maps are injective
    and in range, and every pattern edge lies inside its hyperedge.
    """
    vertex_map, edge_map = w.vertex_map, w.edge_map
    if len(vertex_map) != f.n or len(edge_map) != f.m:
        return False
    if len(set(vertex_map)) != f.n or len(set(edge_map)) != f.m:
        return False
    if any(not 0 <= v < h.n for v in vertex_map):
        return False
    if any(not 0 <= e < h.m for e in edge_map):
        return False
    for (u, v), e in zip(f.edges, edge_map):
        hyperedge = h.edges[e]
        if vertex_map[u] not in hyperedge or vertex_map[v] not in hyperedge:
            return False
    return True


def _walk(
    h: Hypergraph,
    length: int,
    budget: Budget,
    start: int,
    closes: bool = False,
) -> Optional[Tuple[List[int], List[int]]]:
    """
    Backtracks over alternating sequences v0, e1, v1, ..., e_length,
    v_length of distinct vertices and distinct hyperedges starting at
    `start`. With `closes`, the vertices after v0 must exceed it and a
    further unused hyperedge must contain both the last vertex and v0.
    """
    vertices = [start]
    edges: List[int] = []
    used_edges: Set[int] = set()
    on_walk = {start}

    def extend() -> Optional[int]:
        v = vertices[-1]
        if len(edges) == length:
            if not closes:
                return -1
            for e in h.incidence[v]:
                if e not in used_edges and start in h.edges[e]:
                    return e
            return None

        for e in h.incidence[v]:
            if e in used_edges:
                continue
            for w in h.edges[e]:
                if w in on_walk or (closes and w < start):
                    continue
                budget.spend()
                vertices.append(w)
                edges.append(e)
                used_edges.add(e)
                on_walk.add(w)
                closing = extend()
                if closing is not None:
                    return closing
                on_walk.discard(w)
                used_edges.discard(e)
                edges.pop()
                vertices.pop()
        return None

    closing = extend()
    if closing is None:
        return None
    if closes:
        edges.append(closing)
    return vertices, edges


def contains_berge_path(
    h: Hypergraph, k: int, budget: Budget = None
) -> Optional[BergeWitness]:
    """
    Searches for a Berge path with k edges. The witness is aligned with
    patterns.path(k): vertex i is the i-th vertex on the path and edge i
    joins vertices i and i+1.

    >>> contains_berge_path(Hypergraph(3, [(0, 1, 2)]), 1)
    BergeWitness(vertex_map=(0, 1), edge_map=(0,), search='exhaustive')
    >>> contains_berge_path(Hypergraph(3, [(0, 1, 2)]), 2) is None
    True

    :raises berge_coloring.exceptions.UnsupportedParameterError: If k < 0
    :raises berge_coloring.exceptions.BudgetExceededError: If the budget is
        used up before the search completes
    """
    if k < 0:
        raise UnsupportedParameterError(f"Path length must be >= 0, got {k}.")
    budget = ensure_budget(budget)
    if k + 1 > h.n or k > h.m:
        return None

    for start in range(h.n):
        found = _walk(h, k, budget, start)
        if found is not None:
            vertices, edges = found
            return BergeWitness(tuple(vertices), tuple(edges))
    return None


def contains_berge_cycle(
    h: Hypergraph, k: int, budget: Budget = None
) -> Optional[BergeWitness]:
    """
    Searches for a Berge cycle of length k >= 2. The cycle is reported
    starting at its smallest vertex and is aligned with patterns.cycle(k),
    whose last edge closes the cycle. For k = 2 this finds two hyperedges
    sharing two vertices.

    >>> contains_berge_cycle(Hypergraph(4, [(0, 1, 2), (0, 1, 3)]), 2)
    BergeWitness(vertex_map=(0, 1), edge_map=(0, 1), search='exhaustive')

    :raises berge_coloring.exceptions.UnsupportedParameterError: If k < 2
    :raises berge_coloring.exceptions.BudgetExceededError: If the budget is
        used up before the search completes
    """
    if k < 2:
        raise UnsupportedParameterError(f"Cycle length must be >= 2, got {k}.")
    budget = ensure_budget(budget)
    if k > h.n or k > h.m:
        return None

    for start in range(h.n):
        found = _walk(h, k - 1, budget, start, closes=True)
        if found is not None:
            vertices, edges = found
            return BergeWitness(tuple(vertices), tuple(edges))
    return None


def is_hypertree(h: Hypergraph, budget: Budget = None) -> bool:
    """
    True iff h has no Berge cycle of any length, two hyperedges sharing two
    vertices included.

    >>> is_hypertree(Hypergraph(5, [(0, 1, 2), (2, 3, 4)]))
    True
    >>> is_hypertree(Hypergraph(4, [(0, 1, 2), (0, 1, 3)]))
    False
    """
    budget = ensure_budget(budget)
    for k in range(2, min(h.n, h.m) + 1):
        if contains_berge_cycle(h, k, budget) is not None:
            return False
    return True


def contains_sub_hypergraph(
    h: Hypergraph, p: Hypergraph, budget: Budget = None
) -> Optional[Tuple[int, ...]]:
    """
    Searches for an injective vertex map under which every hyperedge of p is
    a hyperedge of h. Partial images of p's hyperedges are pruned early when
    no hyperedge of h of the right size contains them.

    >>> from berge_coloring.constructions import complete_r_graph, expansion
    >>> from berge_coloring.patterns import star
    >>> h, p = complete_r_graph(5, 3), expansion(star(2), 3)
    >>> contains_sub_hypergraph(h, p) is not None
    True

    :return: p vertex -> h vertex, or None
    :raises berge_coloring.exceptions.BudgetExceededError: If the budget is
        used up before the search completes
    """
    budget = ensure_budget(budget)
    if p.n > h.n or p.m > h.m:
        return None

    order: List[int] = []
    seen: Set[int] = set()
    for e in p.edges:
        for v in e:
            if v not in seen:
                seen.add(v)
                order.append(v)
    order += [v for v in range(p.n) if v not in seen]

    host_edges = set(h.edges)
    host_degree = [len(inc) for inc in h.incidence]
    pattern_degree = [len(inc) for inc in p.incidence]
    p_adjacency = p.shadow_graph.adjacency
    adjacency = h.shadow_graph.adjacency
    image: List[Optional[int]] = [None] * p.n
    used: Set[int] = set()

    def extendable(e: Tuple[int, ...]) -> bool:
        mapped = [image[v] for v in e if image[v] is not None]
        if len(mapped) == len(e):
            return tuple(sorted(mapped)) in host_edges
        if len(mapped) < 2:
            return True
        common = set(h.incidence[mapped[0]])
        for v in mapped[1:]:
            common.intersection_update(h.incidence[v])
        return any(len(h.edges[i]) == len(e) for i in common)

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        placed_nbr = next((u for u in p_adjacency[x] if image[u] is not None), None)
        if placed_nbr is None:
            pool = range(h.n)
        else:
            pool = sorted(adjacency[image[placed_nbr]])
        for y in pool:
            if y in used or host_degree[y] < pattern_degree[x]:
                continue
            budget.spend()
            image[x] = y
            if all(extendable(p.edges[j]) for j in p.incidence[x]):
                used.add(y)
                if search(i + 1):
                    return True
                used.discard(y)
            image[x] = None
        return False

    if search(0):
        return tuple(image)
    return None


def is_skplus_free(h: Hypergraph, k: int, budget: Budget = None) -> bool:
    """
    Whether a 3-uniform hypergraph avoids S_k^+, i.e. k triples meeting
    pairwise in one common vertex. Equivalent to d^M(v) < k everywhere.

    >>> from berge_coloring.constructions import complete_r_graph
    >>> is_skplus_free(complete_r_graph(5, 3), 3)
    True
    >>> is_skplus_free(complete_r_graph(5, 3), 2)
    False

    :raises berge_coloring.exceptions.NotUniformError: If h is not 3-uniform
    """
    if not h.is_uniform(3):
        raise NotUniformError("S_k^+ freeness is only defined for 3-uniform input.")
    budget = ensure_budget(budget)
    return all(degrees(h, v, budget).d_M < k for v in range(h.n))


def _bfs_order(t: PatternGraph) -> List[Tuple[int, Optional[int], Optional[int]]]:
    """(vertex, parent, edge index) triples; every vertex after a component
    root has exactly one earlier neighbor, its parent."""
    adj: List[List[Tuple[int, int]]] = [[] for _ in range(t.n)]
    for idx, (u, v) in enumerate(t.edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))

    order = []
    seen = [False] * t.n
    for root in range(t.n):
        if seen[root]:
            continue
        seen[root] = True
        order.append((root, None, None))
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, idx in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    order.append((y, x, idx))
                    queue.append(y)
    return order


def greedy_embed_tree(
    h: Hypergraph, t: PatternGraph, budget: Budget = None
) -> Optional[BergeWitness]:
    """
    Embeds a forest greedily. Vertices of t are placed in BFS order; a vertex
    goes to the lowest unplaced host neighbor of its parent's image that lies
    in no hyperedge already defining a tree edge at that image. Any hyperedge
    joining the two is then unused and becomes the new tree edge's.

    When every host vertex has at least k+(r-3)(k-1)+Δ-1 neighbors (k edges,
    maximum degree Δ, rank r >= 3) this never gets stuck. Otherwise the same
    single pass is attempted and a witness is tagged "incomplete-search";
    a None result then says nothing about containment.

    :raises berge_coloring.exceptions.NotAForestError: If t has a cycle
    """
    if not t.is_forest():
        raise NotAForestError()
    budget = ensure_budget(budget)
    if t.n > h.n:
        return None

    adjacency = h.shadow_graph.adjacency
    shadow_degree = [len(a) for a in adjacency]
    threshold = tree_threshold(t.m, h.rank, t.max_degree)
    guaranteed = h.n > 0 and min(shadow_degree) >= threshold
    search = GREEDY if guaranteed else INCOMPLETE

    pair_edges = _PairIndex(h)
    image: List[Optional[int]] = [None] * t.n
    embedded: Set[int] = set()
    used_edges: Set[int] = set()
    edge_map: List[Optional[int]] = [None] * t.m

    for x, parent, idx in _bfs_order(t):
        if parent is None:
            free = [v for v in range(h.n) if v not in embedded]
            y = max(free, key=lambda v: (shadow_degree[v], -v))
        else:
            anchor = image[parent]
            # vertices sharing an already defining hyperedge with the anchor
            blocked = {
                w for e in used_edges if anchor in h.edges[e] for w in h.edges[e]
            }
            y = None
            for candidate in sorted(adjacency[anchor]):
                budget.spend()
                if candidate in embedded or candidate in blocked:
                    continue
                # none of these is in use, or candidate would be blocked
                e = pair_edges(anchor, candidate)[0]
                y = candidate
                used_edges.add(e)
                edge_map[idx] = e
                break
            if y is None:
                if guaranteed:
                    logger.error(
                        f"Greedy tree embedding got stuck at pattern vertex {x} "
                        f"although every vertex has >= {threshold} neighbors"
                    )
                else:
                    logger.warning(
                        f"Greedy tree embedding stopped at pattern vertex {x}; "
                        f"the degree condition (>= {threshold} neighbors) does "
                        f"not hold, so the search was incomplete"
                    )
                return None
        image[x] = y
        embedded.add(y)

    return BergeWitness(tuple(image), tuple(edge_map), search)
