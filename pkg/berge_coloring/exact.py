"""
Exact chromatic numbers for desk-scale hypergraphs.

The strong chromatic number is the chromatic number of the shadow graph,
found by DSATUR branch and bound between a maximum-clique lower bound and a
greedy DSATUR upper bound. The weak chromatic number is found by trying
palettes of increasing size.
"""
import logging
from typing import List, NamedTuple

import networkx as nx

from berge_coloring.budget import Budget, ensure_budget
from berge_coloring.coloring import STRONG, WEAK, Coloring, ensure_valid
from berge_coloring.hypergraph import Hypergraph

logger = logging.getLogger("berge_coloring")


class ChromaticResult(NamedTuple):
    value: int
    coloring: Coloring


def exact_strong_chromatic(h: Hypergraph, budget: Budget = None) -> ChromaticResult:
    """
    >>> from berge_coloring.constructions import complete_r_graph
    >>> exact_strong_chromatic(complete_r_graph(5, 3)).value
    5

    :raises berge_coloring.exceptions.BudgetExceededError: If the search
        needs more nodes than the budget allows
    """
    budget = ensure_budget(budget)
    if h.n == 0:
        return ChromaticResult(0, Coloring([], STRONG))

    graph = h.shadow_graph.to_networkx()
    greedy = nx.greedy_color(graph, strategy="DSATUR")
    best = max(greedy.values()) + 1
    best_colors = [greedy[v] for v in range(h.n)]

    clique = sorted(max(nx.find_cliques(graph), key=len))
    lower = len(clique)
    logger.debug(f"Strong chromatic number of {h} lies in [{lower}, {best}]")

    if lower < best:
        nbrs = [sorted(graph[v]) for v in range(h.n)]
        colors = [-1] * h.n
        for i, v in enumerate(clique):
            colors[v] = i

        def saturation(v: int) -> int:
            return len({colors[w] for w in nbrs[v] if colors[w] >= 0})

        def search(colored: int, used: int):
            nonlocal best, best_colors
            if colored == h.n:
                best, best_colors = used, list(colors)
                return
            budget.spend()

            v = max(
                (v for v in range(h.n) if colors[v] < 0),
                key=lambda v: (saturation(v), len(nbrs[v]), -v),
            )
            forbidden = {colors[w] for w in nbrs[v]}
            for c in range(min(used + 1, best - 1)):
                if c in forbidden:
                    continue
                colors[v] = c
                search(colored + 1, max(used, c + 1))
                colors[v] = -1
                if best == lower:
                    return

        search(len(clique), len(clique))

    coloring = ensure_valid(h, Coloring(best_colors, STRONG))
    logger.info(f"Exact strong chromatic number of {h}: {best}")
    return ChromaticResult(best, coloring)


def exact_weak_chromatic(h: Hypergraph, budget: Budget = None) -> ChromaticResult:
    """
    Tries palettes of size 1, 2, ... Vertices are colored in id order and a
    vertex may open a new color only as the next unused one, so every
    coloring is visited once up to renaming colors. An edge is checked when
    its largest vertex gets its color.

    >>> exact_weak_chromatic(Hypergraph(3, [(0, 1, 2)]))
    ChromaticResult(value=2, coloring=<Coloring mode=weak palette_size=2 n=3>)

    :raises berge_coloring.exceptions.BudgetExceededError: If the search
        needs more nodes than the budget allows
    """
    budget = ensure_budget(budget)
    if h.n == 0:
        return ChromaticResult(0, Coloring([], WEAK))
    if h.m == 0:
        return ChromaticResult(1, Coloring([0] * h.n, WEAK))

    closing: List[List[tuple]] = [[] for _ in range(h.n)]
    for e in h.edges:
        closing[e[-1]].append(e[:-1])
    colors = [0] * h.n

    def search(v: int, used: int, palette: int) -> bool:
        if v == h.n:
            return True
        budget.spend()
        for c in range(min(used + 1, palette)):
            colors[v] = c
            if all(any(colors[u] != c for u in rest) for rest in closing[v]):
                if search(v + 1, max(used, c + 1), palette):
                    return True
        return False

    palette = 2
    while not search(0, 0, palette):
        palette += 1

    coloring = ensure_valid(h, Coloring(colors, WEAK))
    logger.info(f"Exact weak chromatic number of {h}: {palette}")
    return ChromaticResult(palette, coloring)
