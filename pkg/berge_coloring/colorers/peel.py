import logging
from typing import Optional

from berge_coloring.budget import Budget, ensure_budget
from berge_coloring.coloring import STRONG, Coloring, ensure_valid, greedy_extend
from berge_coloring.colorers.base import ColorerBase
from berge_coloring.detect import BergeWitness, contains_berge, greedy_embed_tree
from berge_coloring.exceptions import (
    CertificateException,
    NonemptyCoreError,
    UnsupportedParameterError,
)
from berge_coloring.hypergraph import Hypergraph, peel
from berge_coloring.patterns import PatternGraph, parse_pattern

logger = logging.getLogger("berge_coloring")


def peel_color_strong(h: Hypergraph, threshold: int) -> Coloring:
    """
    Peels h at the threshold and, if nothing is left, colors the vertices in
    reverse elimination order with the least color not used by an already
    colored shadow neighbor. Each vertex sees fewer than `threshold` colored
    neighbors, so at most `threshold` colors are used.

    >>> from berge_coloring.constructions import complete_r_graph
    >>> peel_color_strong(complete_r_graph(5, 3), 5).palette_size
    5

    :raises berge_coloring.exceptions.NonemptyCoreError: If peeling leaves a
        core; the core carries a Berge copy of every forest whose threshold
        it meets
    """
    result = peel(h, threshold)
    if result.core.n:
        raise NonemptyCoreError(
            result.core, result.vertices, threshold, result.edge_origin
        )

    colors = greedy_extend(h, [None] * h.n, reversed(result.order), STRONG, threshold)
    return ensure_valid(h, Coloring(colors, STRONG))


def certify_core(
    err: NonemptyCoreError, f: PatternGraph, budget: Budget = None
) -> Optional[BergeWitness]:
    """
    Looks for a Berge copy of f in the core of a failed peel, greedily first
    if f is a forest, and maps the witness back to the peeled hypergraph's
    vertex and edge ids. A Berge copy in the truncated core is one in the
    input too, since every core edge lies inside the input edge it came from.
    """
    budget = ensure_budget(budget)
    witness = None
    if f.is_forest():
        witness = greedy_embed_tree(err.core, f, budget)
    if witness is None:
        witness = contains_berge(err.core, f, budget)
    if witness is None:
        return None
    return BergeWitness(
        tuple(err.vertices[v] for v in witness.vertex_map),
        tuple(err.edge_origin[e] for e in witness.edge_map),
        witness.search,
    )


class PeelColorer(ColorerBase):
    """Greedy strong colorer for hypergraphs without a Berge copy of a tree."""

    NAME = "peel"

    def __init__(
        self, threshold: int, pattern: str = None, budget_options: dict = None
    ):
        """
        Creates a PeelColorer.

        :param threshold: Peeling threshold; also the palette size
        :param pattern: Optional pattern spec (e.g. "path:4"). With a
            pattern, a nonempty core is searched for a Berge copy of it and
            BergePatternFound is raised. Without one, NonemptyCoreError is
            passed on to the caller.
        :param budget_options: Options for the search Budget
        """
        super().__init__(STRONG, budget_options)
        if threshold < 1:
            raise UnsupportedParameterError(f"Threshold must be >= 1, got {threshold}")
        self.threshold = threshold
        self.pattern_spec = pattern
        self.pattern = parse_pattern(pattern) if pattern else None

    def __repr__(self) -> str:
        return f"<PeelColorer threshold={self.threshold} pattern={self.pattern_spec}>"

    def _color(self, h: Hypergraph) -> Coloring:
        return peel_color_strong(h, self.threshold)

    def certify(
        self, h: Hypergraph, cause: CertificateException
    ) -> Optional[BergeWitness]:
        if self.pattern is None or not isinstance(cause, NonemptyCoreError):
            raise cause
        logger.info(
            f"Searching the core ({cause.core.n} vertices) for {self.pattern_spec}"
        )
        return certify_core(cause, self.pattern, self.budget)
