"""
DFS trees of {2,3}-uniform hypergraphs and the colorings read off them.

The tree is grown from a root. Expanding a vertex r picks a hyperedge e
through r that is not ignored and still has an unvisited vertex v, attaches
v below r and explores v's subtree with e ignored. If e has a third vertex u
still unvisited once that subtree is done, u is attached below r as well
(with e as its defining hyperedge) and explored without ignoring e; v and u
then form a special pair.

In such a tree two vertices from disjoint subtrees only share a hyperedge
when they form a special pair, and that hyperedge is the pair plus their
parent. Colorings that keep every vertex's color out of its subtree and
separate special pairs are therefore strong.
"""
import logging
import math
from typing import Dict, Iterator, List, Tuple

from berge_coloring.coloring import STRONG, WEAK, Coloring, ensure_valid
from berge_coloring.exceptions import (
    NotUniformError,
    PaletteExceededError,
    UsageException,
)
from berge_coloring.hypergraph import Hypergraph

logger = logging.getLogger("berge_coloring")

SpecialPair = Tuple[int, int]


class DfsTree:
    def __init__(self, root: int):
        self.root = root
        self.parent: Dict[int, int] = {}
        # child vertex -> index of the hyperedge defining the edge to its parent
        self.defining: Dict[int, int] = {}
        self.depth: Dict[int, int] = {root: 0}
        self.special_pairs: Dict[int, List[SpecialPair]] = {}
        self.child_order: Dict[int, List[int]] = {root: []}
        # vertices in the order they were visited
        self.order: List[int] = [root]

    def __repr__(self) -> str:
        return f"<DfsTree root={self.root} size={len(self)} height={self.height}>"

    def __len__(self) -> int:
        return len(self.order)

    def __contains__(self, v: int) -> bool:
        return v in self.depth

    def attach(self, parent: int, child: int, edge_index: int):
        self.parent[child] = parent
        self.defining[child] = edge_index
        self.depth[child] = self.depth[parent] + 1
        self.child_order[parent].append(child)
        self.child_order[child] = []
        self.order.append(child)

    def add_special_pair(self, first: int, second: int):
        self.special_pairs.setdefault(self.depth[first], []).append((first, second))

    @property
    def height(self) -> int:
        return max(self.depth.values())

    def children(self, v: int) -> List[int]:
        return self.child_order[v]

    def path_to_root(self, v: int) -> List[int]:
        path = [v]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path

    def subtree(self, v: int) -> Iterator[int]:
        stack = [v]
        while stack:
            x = stack.pop()
            yield x
            stack.extend(reversed(self.child_order[x]))

    def second_members(self) -> Dict[int, int]:
        """Second member of each special pair -> its partner."""
        return {
            second: first
            for pairs in self.special_pairs.values()
            for first, second in pairs
        }


def _require_rank3(h: Hypergraph):
    if h.rank > 3:
        raise NotUniformError(
            f"DFS trees need a {{2,3}}-uniform hypergraph, got rank {h.rank}"
        )


def dfs_build(h: Hypergraph, root: int) -> DfsTree:
    """
    Builds the DFS tree of root's component. Iterative; every vertex keeps a
    pointer into its incidence list and every hyperedge a counter of how many
    tree edges on the current root path it defines through a first-child
    descent, so ignored hyperedges are recognized in constant time and no
    hyperedge is scanned twice from the same vertex.

    >>> t = dfs_build(Hypergraph(3, [(0, 1, 2)]), 0)
    >>> t.child_order[0], t.special_pairs, t.defining
    ([1, 2], {1: [(1, 2)]}, {1: 0, 2: 0})

    :raises berge_coloring.exceptions.InvalidVertexError: If root is out of
        range
    :raises berge_coloring.exceptions.NotUniformError: If h has an edge with
        more than three vertices
    """
    h.check_vertex(root)
    _require_rank3(h)

    tree = DfsTree(root)
    visited = [False] * h.n
    visited[root] = True
    pointer = [0] * h.n
    on_path = [0] * h.m
    incidence = h.incidence
    edges = h.edges

    # frames: [vertex, edge index of the pending first-child descent, child]
    stack: List[List[int]] = [[root, -1, -1]]
    while stack:
        frame = stack[-1]
        r, pending, child = frame

        if pending >= 0:
            on_path[pending] -= 1
            frame[1] = -1
            third = [w for w in edges[pending] if w != r and w != child]
            if third and not visited[third[0]]:
                u = third[0]
                visited[u] = True
                tree.attach(r, u, pending)
                tree.add_special_pair(child, u)
                stack.append([u, -1, -1])
                continue

        inc = incidence[r]
        descended = False
        while pointer[r] < len(inc):
            e = inc[pointer[r]]
            pointer[r] += 1
            if on_path[e]:
                continue
            v = next((w for w in edges[e] if w != r and not visited[w]), None)
            if v is None:
                continue
            visited[v] = True
            tree.attach(r, v, e)
            on_path[e] += 1
            frame[1], frame[2] = e, v
            stack.append([v, -1, -1])
            descended = True
            break

        if not descended:
            stack.pop()

    logger.debug(f"Built {tree!r} in {h}")
    return tree


def _require_spanning(h: Hypergraph, t: DfsTree):
    if len(t) != h.n:
        raise UsageException(
            f"DFS tree spans {len(t)} of {h.n} vertices; color one component "
            f"at a time"
        )


def dfs_color_strong(h: Hypergraph, t: DfsTree, k: int) -> Coloring:
    """
    Colors the tree top down from the palette 0..k-1. A vertex takes the
    first color of the palette it receives and hands the rest to each child.
    The second member of a special pair receives that rest with its first two
    colors swapped, which is the same as transposing two color classes in
    its subtree after coloring all children alike.

    Uses height+1 colors, or height+2 with a special pair at the deepest
    level.

    >>> h = Hypergraph(3, [(0, 1, 2)])
    >>> dfs_color_strong(h, dfs_build(h, 0), 3).colors
    (0, 1, 2)

    :raises berge_coloring.exceptions.PaletteExceededError: If k colors are
        not enough for the tree
    :raises berge_coloring.exceptions.InvalidColoringError: If the result is
        not a strong coloring of h
    """
    _require_spanning(h, t)
    swapped = t.second_members()
    palettes: Dict[int, Tuple[int, ...]] = {t.root: tuple(range(k))}
    colors = [0] * h.n

    for v in t.order:
        palette = palettes.pop(v)
        if not palette:
            raise PaletteExceededError(v, k)
        colors[v] = palette[0]
        rest = palette[1:]
        for child in t.children(v):
            if child in swapped:
                if len(rest) < 2:
                    raise PaletteExceededError(child, k)
                palettes[child] = (rest[1], rest[0]) + rest[2:]
            else:
                palettes[child] = rest

    return ensure_valid(h, Coloring(colors, STRONG))


def dfs_color_weak(h: Hypergraph, t: DfsTree, k: int) -> Coloring:
    """
    Colors every vertex by its depth modulo ceil(k/2): layers of equal color
    are ceil(k/2) apart.

    >>> h = Hypergraph(3, [(0, 1, 2)])
    >>> dfs_color_weak(h, dfs_build(h, 0), 3).colors
    (0, 1, 1)

    :raises berge_coloring.exceptions.InvalidColoringError: If the result is
        not a weak coloring of h; carries the violating hyperedge
    """
    _require_spanning(h, t)
    layers = max(math.ceil(k / 2), 1)
    colors = [t.depth[v] % layers for v in range(h.n)]
    return ensure_valid(h, Coloring(colors, WEAK))
