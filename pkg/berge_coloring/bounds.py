"""
Closed-form chromatic bounds for hypergraphs without a Berge copy (or an
expansion) of a given pattern. Lets a caller compare what a colorer produced
with what is provably enough.
"""
import math
from typing import NamedTuple

from berge_coloring.exceptions import UnsupportedParameterError


class Bound(NamedTuple):
    pattern: str
    r: int
    mode: str
    upper: int
    # best known lower bound from a construction, if any
    lower: int = None


def _require(condition: bool, msg: str):
    if not condition:
        raise UnsupportedParameterError(msg)


def tree_threshold(k: int, r: int, delta: int) -> int:
    """
    Neighborhood size that forces a Berge copy of every forest with k edges
    and maximum degree delta in an at most r-uniform hypergraph. It is also
    the number of colors the peeling colorer needs on hypergraphs avoiding
    such a forest. Ranks below 3 are treated as 3.

    >>> tree_threshold(4, 3, 2)
    5
    >>> tree_threshold(3, 4, 3)
    7
    """
    r = max(r, 3)
    return k + (r - 3) * (k - 1) + delta - 1


def star_bound(k: int, r: int) -> int:
    """
    Strong chromatic bound for Berge-S_k-free r-uniform hypergraphs. Steiner
    systems with blocks of size r on (r-1)(k-1)+1 points attain it.

    >>> star_bound(4, 3)
    7
    """
    _require(k >= 1 and r >= 2, f"star_bound needs k >= 1, r >= 2; got {k}, {r}")
    return (r - 1) * (k - 1) + 1


def path_bound(k: int, r: int) -> int:
    """
    Strong bound for Berge-P_k-free at most r-uniform hypergraphs: k for
    r <= 3, k+9 for r = 4 and the general forest bound beyond that.

    >>> path_bound(5, 3), path_bound(3, 4), path_bound(3, 5)
    (5, 12, 8)
    """
    _require(k >= 1, f"path_bound needs k >= 1, got {k}")
    if r <= 3:
        return k
    if r == 4:
        return k + 9
    return tree_threshold(k, r, 2)


def weak_path_bound(k: int) -> int:
    """Weak bound for Berge-P_k-free 3-uniform hypergraphs."""
    _require(k >= 1, f"weak_path_bound needs k >= 1, got {k}")
    return math.ceil(k / 2)


def spider_bound(k: int) -> int:
    """
    Sharp strong bound for 3-uniform hypergraphs without a Berge spider with
    k legs; complete 3-graphs on 2k vertices attain it.
    """
    _require(k >= 1, f"spider_bound needs k >= 1, got {k}")
    return 2 * k


def double_star_bound(t: int, k: int) -> int:
    _require(t >= 1 and k >= 1, f"double_star_bound needs t, k >= 1; got {t}, {k}")
    return 2 * max(t, k) + 1


def broom_bound(t: int, k: int) -> int:
    """
    >>> broom_bound(2, 3), broom_bound(3, 2)
    (7, 5)
    """
    _require(t >= 2 and k >= 2, f"broom_bound needs t, k >= 2; got {t}, {k}")
    if t <= k - 1:
        return 2 * k + 1
    return t + k


def skplus_bounds(k: int) -> Bound:
    """
    Lower and upper strong bounds for 3-uniform hypergraphs without S_k^+.

    >>> skplus_bounds(3)
    Bound(pattern='skplus:3', r=3, mode='strong', upper=18, lower=10)
    """
    _require(k >= 2, f"skplus_bounds needs k >= 2, got {k}")
    return Bound(
        pattern=f"skplus:{k}",
        r=3,
        mode="strong",
        upper=math.floor(2 * k * k + k / 2 - 1),
        lower=2 * k * k - 2 * k - 2,
    )


def bound_for(pattern_spec: str, r: int = 3, mode: str = "strong") -> Bound:
    """
    Looks up the bound matching a named pattern spec, as accepted by
    patterns.named_pattern(), plus `skplus:k`.

    >>> bound_for("star:4")
    Bound(pattern='star:4', r=3, mode='strong', upper=7, lower=7)
    >>> bound_for("path:5", mode="weak").upper
    3

    :raises berge_coloring.exceptions.UnsupportedParameterError: If there is
        no known bound for the pattern, rank and mode
    """
    name, _, params = pattern_spec.partition(":")
    try:
        args = [int(x) for x in params.split(",")] if params else []
    except ValueError:
        raise UnsupportedParameterError(f"Bad pattern spec {pattern_spec!r}")

    if name == "skplus" and len(args) == 1:
        _require(r == 3 and mode == "strong", "skplus bounds are 3-uniform, strong")
        return skplus_bounds(args[0])

    if mode == "weak":
        _require(
            name == "path" and len(args) == 1 and r == 3,
            "Weak bounds are only known for Berge paths in 3-uniform input",
        )
        value = weak_path_bound(args[0])
        return Bound(pattern_spec, r, mode, value, value)

    if name == "path" and len(args) == 1:
        lower = args[0] if r <= 3 else None
        return Bound(pattern_spec, r, mode, path_bound(args[0], r), lower)
    if name == "star" and len(args) == 1:
        value = star_bound(args[0], r)
        return Bound(pattern_spec, r, mode, value, value)
    # the remaining values are sharp for 3-uniform hypergraphs
    sharp = {
        "spider": (spider_bound, 1),
        "dstar": (double_star_bound, 2),
        "broom": (broom_bound, 2),
    }
    if name in sharp and r == 3:
        func, arity = sharp[name]
        _require(len(args) == arity, f"Bad pattern spec {pattern_spec!r}")
        value = func(*args)
        return Bound(pattern_spec, r, mode, value, value)

    raise UnsupportedParameterError(
        f"No known {mode} bound for {pattern_spec!r} at r={r}"
    )
