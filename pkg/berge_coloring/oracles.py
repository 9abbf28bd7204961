"""
Brute-force oracles for cross-checking the search engines on tiny inputs.

Nothing here reuses the engines' code or cached structures: edges are read
straight off Hypergraph.edges and everything is plain enumeration.
"""
import itertools
import logging
import time
from typing import Iterator, List, NamedTuple, Tuple

from berge_coloring.exceptions import OracleSizeError, UsageException
from berge_coloring.hypergraph import Hypergraph
from berge_coloring.patterns import PatternGraph

logger = logging.getLogger("berge_coloring")

WEAK_VERTEX_CAP = 10
STRONG_VERTEX_CAP = 12
BERGE_PATTERN_EDGE_CAP = 5
BERGE_HOST_EDGE_CAP = 8
MATCHING_EDGE_CAP = 16


class OracleReport(NamedTuple):
    quantity: str
    value: object
    # number of candidate objects looked at
    enumerated: int
    elapsed: float


def _growth_strings(n: int, blocks: int) -> Iterator[List[int]]:
    """
    Restricted growth strings of length n with values below `blocks`, in
    lexicographic order: one per way of splitting n vertices into at most
    `blocks` unlabeled color classes.

    >>> [''.join(map(str, s)) for s in _growth_strings(3, 2)]
    ['000', '001', '010', '011']
    """
    s = [0] * n

    def fill(i: int, top: int) -> Iterator[List[int]]:
        if i == n:
            yield list(s)
            return
        for c in range(min(top + 2, blocks)):
            s[i] = c
            yield from fill(i + 1, max(top, c))

    if n == 0:
        yield []
    else:
        yield from fill(1, 0)


def _chromatic(h: Hypergraph, mode: str) -> Tuple[int, int]:
    if mode == "strong":
        cap = STRONG_VERTEX_CAP
    elif mode == "weak":
        cap = WEAK_VERTEX_CAP
    else:
        raise UsageException(f"Unknown coloring mode {mode!r}")
    if h.n > cap:
        raise OracleSizeError(f"{mode} chromatic oracle handles n <= {cap}, got {h.n}")
    if h.n == 0:
        return 0, 0

    edges = [list(e) for e in h.edges]
    enumerated = 0
    for p in range(1, h.n + 1):
        for colors in _growth_strings(h.n, p):
            enumerated += 1
            ok = True
            for e in edges:
                distinct = len({colors[v] for v in e})
                if (mode == "strong" and distinct < len(e)) or distinct == 1:
                    ok = False
                    break
            if ok:
                return p, enumerated
    raise AssertionError("giving every vertex its own color always works")


def oracle_chromatic(h: Hypergraph, mode: str) -> int:
    """
    Smallest palette admitting a strong or weak coloring, by listing every
    split of the vertices into color classes for palettes 1, 2, ...

    >>> oracle_chromatic(Hypergraph(3, [(0, 1, 2)]), "weak")
    2

    :raises berge_coloring.exceptions.OracleSizeError: Beyond 10 vertices
        (weak) or 12 vertices (strong)
    """
    return _chromatic(h, mode)[0]


def _berge(h: Hypergraph, f: PatternGraph) -> Tuple[bool, int]:
    if f.n > h.n:
        return False, 0
    if f.m > BERGE_PATTERN_EDGE_CAP or h.m > BERGE_HOST_EDGE_CAP:
        raise OracleSizeError(
            f"Berge oracle handles |E(F)| <= {BERGE_PATTERN_EDGE_CAP} and "
            f"m <= {BERGE_HOST_EDGE_CAP}, got {f.m} and {h.m}"
        )
    if f.m == 0:
        return True, 1

    host = [set(e) for e in h.edges]
    enumerated = 0
    for image in itertools.permutations(range(h.n), f.n):
        options = [
            [i for i, e in enumerate(host) if image[u] in e and image[v] in e]
            for u, v in f.edges
        ]
        for assignment in itertools.product(*options):
            enumerated += 1
            if len(set(assignment)) == f.m:
                return True, enumerated
    return False, enumerated


def oracle_berge(h: Hypergraph, f: PatternGraph) -> bool:
    """
    Berge containment by trying every injective vertex map together with
    every edge assignment.

    >>> oracle_berge(Hypergraph(3, [(0, 1, 2)]), PatternGraph(2, [(0, 1)]))
    True

    :raises berge_coloring.exceptions.OracleSizeError: If f has more than 5
        edges or h more than 8
    """
    return _berge(h, f)[0]


def _matching(g: PatternGraph) -> Tuple[int, int]:
    if g.m > MATCHING_EDGE_CAP:
        raise OracleSizeError(
            f"Matching oracle handles <= {MATCHING_EDGE_CAP} edges, got {g.m}"
        )
    enumerated = 0
    for size in range(min(g.m, g.n // 2), 0, -1):
        for chosen in itertools.combinations(g.edges, size):
            enumerated += 1
            ends = [v for edge in chosen for v in edge]
            if len(set(ends)) == len(ends):
                return size, enumerated
    return 0, enumerated


def oracle_matching(g: PatternGraph) -> int:
    """
    Largest set of pairwise disjoint edges, trying all edge subsets from the
    largest possible size down.

    >>> oracle_matching(PatternGraph(3, [(0, 1), (1, 2), (0, 2)]))
    1

    :raises berge_coloring.exceptions.OracleSizeError: Beyond 16 edges
    """
    return _matching(g)[0]


def link_graph(h: Hypergraph, v: int) -> PatternGraph:
    """
    The link of v in a 3-uniform hypergraph as a plain graph on the other
    vertices of h (ids unchanged).
    """
    pairs = [tuple(u for u in e if u != v) for e in h.edges if v in e]
    if any(len(p) != 2 for p in pairs):
        raise UsageException("link_graph expects a 3-uniform hypergraph")
    return PatternGraph(h.n, pairs)


def run_oracle(
    quantity: str,
    h: Hypergraph = None,
    mode: str = "strong",
    pattern: PatternGraph = None,
    vertex: int = 0,
) -> OracleReport:
    """
    Runs one oracle and reports its answer with the number of candidates it
    enumerated and the time taken.

    >>> run_oracle("chromatic", Hypergraph(3, [(0, 1), (1, 2), (0, 2)])).enumerated
    10

    :param quantity: "chromatic", "berge" or "matching" (the link matching
        of `vertex`)
    """
    start = time.perf_counter()
    if quantity == "chromatic":
        value, enumerated = _chromatic(h, mode)
    elif quantity == "berge":
        value, enumerated = _berge(h, pattern)
    elif quantity == "matching":
        value, enumerated = _matching(link_graph(h, vertex))
    else:
        raise UsageException(f"Unknown oracle quantity {quantity!r}")
    elapsed = time.perf_counter() - start

    logger.info(f"Oracle {quantity}: {value} after {enumerated} candidates")
    return OracleReport(quantity, value, enumerated, elapsed)
