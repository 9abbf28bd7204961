"""
Coloring hypergraphs without a Berge path.

A {2,3}-uniform hypergraph with no Berge path of k edges is peeled below k
neighbors; what is left splits into components in which every vertex has at
least k neighbors. Such a component is colored from its DFS tree, whose
height is at most k-1. The peeled vertices are then put back greedily in
reverse order.
"""
import logging
import math
from typing import List, Optional

from berge_coloring.budget import Budget
from berge_coloring.coloring import STRONG, Coloring, ensure_valid, greedy_extend
from berge_coloring.colorers.base import ColorerBase
from berge_coloring.detect import BergeWitness, contains_berge_path
from berge_coloring.dfs import dfs_build, dfs_color_strong, dfs_color_weak
from berge_coloring.exceptions import (
    BergePkFound,
    CertificateException,
    NotUniformError,
    PaletteExceededError,
    UnsupportedParameterError,
)
from berge_coloring.hypergraph import Hypergraph, components, peel

logger = logging.getLogger("berge_coloring")


def palette_for(k: int, mode: str) -> int:
    """
    >>> palette_for(5, "strong"), palette_for(5, "weak")
    (5, 3)
    """
    return k if mode == STRONG else math.ceil(k / 2)


def _color_pipeline(h: Hypergraph, k: int, mode: str) -> Coloring:
    palette = palette_for(k, mode)
    result = peel(h, k)
    core = result.core
    parts = components(core)
    logger.info(
        f"Peeled {len(result.order)} of {h.n} vertices below {k} neighbors; "
        f"core of {core.n} vertices in {len(parts)} components"
    )

    colors: List[Optional[int]] = [None] * h.n
    # core components have more than k vertices, so none is a lone Berge
    # cycle of length k
    for part in parts:
        truncated = core.restrict(part)
        original = [result.vertices[v] for v in truncated.vertices]
        sub = truncated.hypergraph
        tree = dfs_build(sub, 0)
        logger.debug(f"Component of {sub.n} vertices: {tree!r}")
        if mode == STRONG:
            local = dfs_color_strong(sub, tree, k)
        else:
            # weak colorings are checked against the hyperedges of the input
            local = dfs_color_weak(h.induced(original).hypergraph, tree, k)

        if local.palette_size > palette:
            raise PaletteExceededError(original[0], palette)
        for v, c in zip(original, local.colors):
            colors[v] = c

    greedy_extend(h, colors, reversed(result.order), mode, palette)
    return ensure_valid(h, Coloring(colors, mode))


class BergePathColorer(ColorerBase):
    """
    Strong colorer with k colors, or weak colorer with ceil(k/2) colors, for
    {2,3}-uniform hypergraphs without a Berge path of k edges.
    """

    NAME = "dfs"
    CERTIFICATE = BergePkFound

    def __init__(self, k: int, mode: str = STRONG, budget_options: dict = None):
        super().__init__(mode, budget_options)
        if k < 3:
            raise UnsupportedParameterError(f"Path length must be >= 3, got {k}")
        self.k = k
        self.pattern_spec = f"path:{k}"

    def __repr__(self) -> str:
        return f"<BergePathColorer k={self.k} mode={self.mode}>"

    def _color(self, h: Hypergraph) -> Coloring:
        if h.rank > 3:
            raise NotUniformError(
                f"Berge path coloring needs {{2,3}}-uniform input, got rank {h.rank}"
            )
        return _color_pipeline(h, self.k, self.mode)

    def certify(
        self, h: Hypergraph, cause: CertificateException
    ) -> Optional[BergeWitness]:
        logger.info(f"Searching {h} for a Berge path with {self.k} edges")
        return contains_berge_path(h, self.k, self.budget)


def color_bpk_free(
    h: Hypergraph, k: int, mode: str = STRONG, budget: Budget = None
) -> Coloring:
    """
    Colors a {2,3}-uniform hypergraph without Berge paths of k edges with at
    most k colors (strong) or ceil(k/2) colors (weak).

    >>> from berge_coloring.constructions import complete_r_graph, disjoint_union
    >>> h = disjoint_union([complete_r_graph(5, 3)] * 3)
    >>> color_bpk_free(h, 5).palette_size
    5
    >>> color_bpk_free(h, 5, "weak").palette_size
    3

    :raises berge_coloring.exceptions.BergePkFound: If the input contains a
        Berge path of k edges and the pipeline stumbled over it; carries the
        witness
    :raises berge_coloring.exceptions.UncertifiedFailureError: If the
        pipeline failed without a Berge path in the input (possible for weak
        colorings of inputs with 2-edges)
    """
    colorer = BergePathColorer(k, mode)
    if budget is not None:
        colorer.budget = budget
    return colorer.color(h)
