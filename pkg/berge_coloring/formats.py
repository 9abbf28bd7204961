"""
Plain text formats for hypergraphs, colorings and Berge witnesses.

All three are line based, use LF line endings and allow `#` comments both on
their own line and after the data on a line.

HGR:
    hgr <n> <m> <r_max>
    <strictly increasing vertex ids of edge 0>
    ...

Coloring:
    col <strong|weak> <palette_size>
    <vertex> <color>
    ...

Witness:
    bw [<pattern spec>]
    v <pattern vertex> <host vertex>
    e <pattern edge index> <host edge index>
"""
import logging
from pathlib import Path
import sys
from typing import Iterable, Iterator, List, NamedTuple, Optional, Tuple, Union

from berge_coloring.coloring import MODES, Coloring
from berge_coloring.detect import EXHAUSTIVE, BergeWitness
from berge_coloring.exceptions import InvalidHypergraphError, ParseError
from berge_coloring.hypergraph import Hypergraph

logger = logging.getLogger("berge_coloring")

PathLike = Union[str, Path]


class WitnessFile(NamedTuple):
    pattern: Optional[str]
    witness: BergeWitness


def _data_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yields (line number, tokens) for every line that isn't blank."""
    for line_no, line in enumerate(text.split("\n"), start=1):
        tokens = line.partition("#")[0].split()
        if tokens:
            yield line_no, tokens


def _ints(line_no: int, tokens: Iterable[str]) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line_no, f"expected integers, got {' '.join(tokens)!r}")


def _comment_block(comments: Iterable[str]) -> str:
    return "".join(f"# {c}\n" for c in comments)


def dumps_hgr(h: Hypergraph, comments: Iterable[str] = ()) -> str:
    """
    >>> print(dumps_hgr(Hypergraph(4, [(0, 1, 2), (2, 3)])), end="")
    hgr 4 2 3
    0 1 2
    2 3
    """
    header = f"hgr {h.n} {h.m} {h.r_max}\n"
    body = "".join(" ".join(map(str, e)) + "\n" for e in h.edges)
    return header + _comment_block(comments) + body


def loads_hgr(text: str) -> Hypergraph:
    """
    Parses HGR text.

    >>> loads_hgr("hgr 3 1 3\\n# a triangle\\n0 1 2\\n").edges
    ((0, 1, 2),)

    :raises berge_coloring.exceptions.ParseError: If the header is missing or
        malformed, an edge line isn't strictly increasing, or the number of
        edges doesn't match the header
    """
    lines = _data_lines(text)
    first = next(lines, None)
    if first is None:
        raise ParseError(1, "missing 'hgr <n> <m> <r_max>' header")
    line_no, tokens = first
    if tokens[0] != "hgr" or len(tokens) != 4:
        raise ParseError(line_no, "expected 'hgr <n> <m> <r_max>'")
    n, m, r_max = _ints(line_no, tokens[1:])

    edges = []
    last_line = line_no
    for line_no, tokens in lines:
        last_line = line_no
        edge = _ints(line_no, tokens)
        if any(a >= b for a, b in zip(edge, edge[1:])):
            raise ParseError(line_no, f"vertex ids must be strictly increasing: {edge}")
        if len(edges) == m:
            raise ParseError(line_no, f"more than the {m} edges the header declares")
        edges.append(edge)
    if len(edges) != m:
        raise ParseError(last_line, f"header declares {m} edges, found {len(edges)}")

    try:
        return Hypergraph(n, edges, r_max=r_max)
    except InvalidHypergraphError as e:
        raise ParseError(last_line, str(e))


def dumps_coloring(c: Coloring, comments: Iterable[str] = ()) -> str:
    """
    >>> print(dumps_coloring(Coloring([0, 1, 0], "weak")), end="")
    col weak 2
    0 0
    1 1
    2 0
    """
    header = f"col {c.mode} {c.palette_size}\n"
    body = "".join(f"{v} {color}\n" for v, color in enumerate(c.colors))
    return header + _comment_block(comments) + body


def loads_coloring(text: str) -> Coloring:
    """
    Parses coloring text. Vertex lines may come in any order but must name
    every vertex 0..n-1 exactly once.

    :raises berge_coloring.exceptions.ParseError: For a bad header, unknown
        mode, repeated or missing vertices, or a palette size that doesn't
        match the colors used
    """
    lines = _data_lines(text)
    first = next(lines, None)
    if first is None:
        raise ParseError(1, "missing 'col <mode> <palette_size>' header")
    line_no, tokens = first
    if tokens[0] != "col" or len(tokens) != 3:
        raise ParseError(line_no, "expected 'col <mode> <palette_size>'")
    mode = tokens[1]
    if mode not in MODES:
        raise ParseError(line_no, f"unknown coloring mode {mode!r}")
    (palette,) = _ints(line_no, tokens[2:])

    assigned = {}
    last_line = line_no
    for line_no, tokens in lines:
        last_line = line_no
        if len(tokens) != 2:
            raise ParseError(line_no, "expected '<vertex> <color>'")
        v, color = _ints(line_no, tokens)
        if v in assigned:
            raise ParseError(line_no, f"vertex {v} colored twice")
        assigned[v] = color

    n = len(assigned)
    if set(assigned) != set(range(n)):
        raise ParseError(last_line, f"vertex ids must be 0..{n - 1}")
    coloring = Coloring((assigned[v] for v in range(n)), mode)
    if coloring.palette_size != palette:
        raise ParseError(
            last_line,
            f"header declares {palette} colors, {coloring.palette_size} used",
        )
    return coloring


def dumps_witness(
    w: BergeWitness, pattern: str = None, comments: Iterable[str] = ()
) -> str:
    """
    >>> w = BergeWitness((4, 2), (1,))
    >>> print(dumps_witness(w, "path:1"), end="")
    bw path:1
    v 0 4
    v 1 2
    e 0 1
    """
    header = "bw" + (f" {pattern}" if pattern else "") + "\n"
    vertices = "".join(f"v {i} {x}\n" for i, x in enumerate(w.vertex_map))
    edges = "".join(f"e {j} {y}\n" for j, y in enumerate(w.edge_map))
    return header + _comment_block(comments) + vertices + edges


def loads_witness(text: str) -> WitnessFile:
    """
    Parses witness text. The pattern spec after `bw` may contain spaces (a
    `pg` line).

    >>> loads_witness("bw pg 2 0-1\\nv 0 3\\nv 1 5\\ne 0 0\\n").pattern
    'pg 2 0-1'

    :raises berge_coloring.exceptions.ParseError: For a bad header, unknown
        line kinds, or pattern ids that aren't 0, 1, 2, ... in some order
    """
    lines = _data_lines(text)
    first = next(lines, None)
    if first is None or first[1][0] != "bw":
        raise ParseError(first[0] if first else 1, "missing 'bw' header")
    line_no, tokens = first
    pattern = " ".join(tokens[1:]) or None

    maps = {"v": {}, "e": {}}
    for line_no, tokens in lines:
        if tokens[0] not in maps or len(tokens) != 3:
            raise ParseError(line_no, "expected 'v <i> <x>' or 'e <j> <y>'")
        i, x = _ints(line_no, tokens[1:])
        target = maps[tokens[0]]
        if i in target:
            raise ParseError(line_no, f"{tokens[0]} {i} given twice")
        target[i] = x

    for kind, target in maps.items():
        if set(target) != set(range(len(target))):
            raise ParseError(line_no, f"'{kind}' ids must be 0..{len(target) - 1}")
    witness = BergeWitness(
        tuple(maps["v"][i] for i in range(len(maps["v"]))),
        tuple(maps["e"][j] for j in range(len(maps["e"]))),
        EXHAUSTIVE,
    )
    return WitnessFile(pattern, witness)


def read_text(path: PathLike) -> str:
    """Reads a whole file, or standard input for "-"."""
    if str(path) == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def write_text(path: Optional[PathLike], text: str):
    """Writes to a file, or standard output for None or "-"."""
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text)
    logger.debug(f"Wrote {len(text)} bytes to {path}")


def read_hgr(path: PathLike) -> Hypergraph:
    return loads_hgr(read_text(path))


def write_hgr(h: Hypergraph, path: Optional[PathLike], comments: Iterable[str] = ()):
    write_text(path, dumps_hgr(h, comments))


def sniff(text: str) -> Optional[str]:
    """
    The kind of a text by its header keyword: "hgr", "col", "bw" or None.

    >>> sniff("# made by gen\\ncol strong 1\\n0 0\\n")
    'col'
    """
    first = next(_data_lines(text), None)
    if first is None or first[1][0] not in ("hgr", "col", "bw"):
        return None
    return first[1][0]
