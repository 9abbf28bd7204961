import logging
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from berge_coloring.exceptions import (
    InvalidColoringError,
    NotUniformError,
    PaletteExceededError,
    PartialColoringError,
    UsageException,
)
from berge_coloring.hypergraph import Hypergraph

logger = logging.getLogger("berge_coloring")

STRONG = "strong"
WEAK = "weak"
MODES = (STRONG, WEAK)


class Coloring:
    def __init__(self, colors: Iterable[int], mode: str = STRONG):
        """
        A vertex coloring tagged with the property it is meant to have.
        Color values are compacted to 0..palette_size-1 keeping their
        relative order.

        >>> c = Coloring([5, 2, 5, 9], mode="weak")
        >>> c.colors, c.palette_size
        ((1, 0, 1, 2), 3)

        :param colors: Color per vertex, indexed by vertex id
        :param mode: "strong" (every edge rainbow) or "weak" (no edge
            monochromatic)
        """
        if mode not in MODES:
            raise UsageException(f"Unknown coloring mode {mode!r}")

        raw = list(colors)
        if any(c is None for c in raw):
            raise PartialColoringError(sum(c is not None for c in raw), len(raw))
        rank = {c: i for i, c in enumerate(sorted(set(raw)))}
        self.colors: Tuple[int, ...] = tuple(rank[c] for c in raw)
        self.mode = mode

    def __repr__(self) -> str:
        return (
            f"<Coloring mode={self.mode} palette_size={self.palette_size} "
            f"n={len(self.colors)}>"
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return (self.colors, self.mode) == (other.colors, other.mode)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    @property
    def palette_size(self) -> int:
        return len(set(self.colors))


class Validation(NamedTuple):
    valid: bool
    edge_index: Optional[int] = None
    edge: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.valid


def edge_ok(colors: Sequence[int], edge: Sequence[int], mode: str) -> bool:
    """Whether a single edge is rainbow (strong) or not monochromatic (weak)."""
    seen = {colors[v] for v in edge}
    if mode == STRONG:
        return len(seen) == len(edge)
    return len(seen) > 1


def validate(h: Hypergraph, c: Coloring) -> Validation:
    """
    Checks a coloring against the hypergraph and reports the first violating
    hyperedge.

    >>> h = Hypergraph(3, [(0, 1, 2)])
    >>> validate(h, Coloring([0, 0, 1], "strong"))
    Validation(valid=False, edge_index=0, edge=(0, 1, 2))
    >>> validate(h, Coloring([0, 0, 1], "weak")).valid
    True

    :raises berge_coloring.exceptions.PartialColoringError: If the coloring
        doesn't cover exactly the vertices of h
    """
    if len(c) != h.n:
        raise PartialColoringError(len(c), h.n)
    for idx, e in enumerate(h.edges):
        if not edge_ok(c.colors, e, c.mode):
            return Validation(False, idx, e)
    return Validation(True)


def ensure_valid(h: Hypergraph, c: Coloring) -> Coloring:
    """
    Returns c if it validates against h.

    :raises berge_coloring.exceptions.InvalidColoringError: Otherwise, with
        the violating hyperedge attached
    """
    result = validate(h, c)
    if not result.valid:
        raise InvalidColoringError(c.mode, result.edge_index, result.edge)
    return c


def merge_to_weak(h: Hypergraph, c: Coloring, r: int = None) -> Coloring:
    """
    Turns a strong coloring of an r-uniform hypergraph into a weak one by
    uniting consecutive groups of r-1 color classes. An edge carries r
    distinct strong colors, so it always meets at least two groups.

    >>> from berge_coloring.constructions import complete_r_graph
    >>> merge_to_weak(complete_r_graph(4, 4), Coloring([0, 1, 2, 3])).colors
    (0, 0, 0, 1)

    :param r: Edge size; defaults to the rank of h (or r_max if edgeless)
    :raises berge_coloring.exceptions.NotUniformError: If h is not r-uniform
    :raises berge_coloring.exceptions.InvalidColoringError: If c is not a
        valid strong coloring of h
    """
    if r is None:
        r = h.rank if h.m else h.r_max
    if r < 2 or not h.is_uniform(r):
        raise NotUniformError(f"merge_to_weak needs an r-uniform hypergraph, r={r}")
    if c.mode != STRONG:
        raise UsageException("merge_to_weak expects a strong coloring")
    ensure_valid(h, c)

    merged = Coloring((color // (r - 1) for color in c.colors), WEAK)
    logger.debug(
        f"Merged {c.palette_size} strong colors into {merged.palette_size} "
        f"weak colors (groups of {r - 1})"
    )
    return ensure_valid(h, merged)


def greedy_extend(
    h: Hypergraph,
    colors: List[Optional[int]],
    order: Iterable[int],
    mode: str,
    palette: int,
) -> List[Optional[int]]:
    """
    Colors the vertices in `order` one by one, in place, each with the least
    color that keeps the already colored part valid. Strong: the color is
    absent from every colored shadow neighbor. Weak: the color does not
    complete a monochromatic hyperedge.

    >>> h = Hypergraph(3, [(0, 1, 2)])
    >>> greedy_extend(h, [0, 0, None], [2], "weak", 2)
    [0, 0, 1]

    :param palette: Number of colors allowed
    :raises berge_coloring.exceptions.PaletteExceededError: If a vertex finds
        all `palette` colors blocked
    """
    adjacency = h.shadow_graph.adjacency
    for v in order:
        if mode == STRONG:
            blocked = {colors[w] for w in adjacency[v]}
        else:
            blocked = set()
            for idx in h.incidence[v]:
                others = {colors[w] for w in h.edges[idx] if w != v}
                if len(others) == 1 and None not in others:
                    blocked |= others
        c = next((c for c in range(palette) if c not in blocked), None)
        if c is None:
            raise PaletteExceededError(v, palette)
        colors[v] = c
    return colors
