"""
Seeded instance corpora and the structural checks run against DFS trees.
"""
import itertools
import math
import random
from typing import Callable, Iterator, List

from berge_coloring import Hypergraph
from berge_coloring.constructions import random_hypergraph
from berge_coloring.dfs import DfsTree

# draws allowed per kept instance before a filtered corpus gives up
MAX_DRAWS_PER_INSTANCE = 50


def random_stream(
    n_min: int = 4,
    n_max: int = 10,
    m_max: int = 12,
    r_max: int = 3,
    uniform: bool = False,
    seed: int = 0,
) -> Iterator[Hypergraph]:
    """Endless random hypergraphs; the same seed gives the same sequence."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(n_min, n_max)
        sizes = [r_max] if uniform else range(2, r_max + 1)
        available = sum(math.comb(n, s) for s in sizes)
        m = rng.randint(1, min(m_max, available))
        sub_seed = rng.randrange(2 ** 31)
        yield random_hypergraph(n, m, r_max, uniform=uniform, seed=sub_seed)


def random_corpus(count: int, **kwargs) -> Iterator[Hypergraph]:
    """The first `count` hypergraphs of random_stream(**kwargs)."""
    return itertools.islice(random_stream(**kwargs), count)


def filtered_corpus(
    count: int, keep: Callable[[Hypergraph], bool], **kwargs
) -> List[Hypergraph]:
    """
    The first `count` hypergraphs of random_stream(**kwargs) passing `keep`.

    :raises AssertionError: If the stream runs past
        MAX_DRAWS_PER_INSTANCE * count draws
    """
    kept = []
    stream = random_stream(**kwargs)
    for _ in range(MAX_DRAWS_PER_INSTANCE * count):
        h = next(stream)
        if keep(h):
            kept.append(h)
            if len(kept) == count:
                return kept
    raise AssertionError(f"only {len(kept)} of {count} instances passed the filter")


def _is_ancestor(t: DfsTree, a: int, b: int) -> bool:
    return a in t.path_to_root(b)


def special_pair_violations(h: Hypergraph, t: DfsTree) -> List[str]:
    """
    Special pairs are disjoint siblings whose common defining hyperedge is
    the pair plus their parent, and two vertices in disjoint subtrees share
    a hyperedge only as a special pair.
    """
    problems = []
    pairs = [p for level in t.special_pairs.values() for p in level]
    members = [v for p in pairs for v in p]
    if len(members) != len(set(members)):
        problems.append("special pairs overlap")

    pair_set = {frozenset(p) for p in pairs}
    for a, b in pairs:
        parent = t.parent.get(a)
        if parent is None or t.parent.get(b) != parent:
            problems.append(f"special pair {(a, b)} are not siblings")
            continue
        if t.defining[a] != t.defining[b]:
            problems.append(f"special pair {(a, b)} has two defining edges")
        elif set(h.edges[t.defining[a]]) != {parent, a, b}:
            problems.append(f"special pair {(a, b)} edge isn't pair plus parent")

    for e in h.edges:
        for x, y in itertools.combinations(e, 2):
            if x not in t or y not in t:
                continue
            if _is_ancestor(t, x, y) or _is_ancestor(t, y, x):
                continue
            if frozenset((x, y)) not in pair_set:
                problems.append(f"{x} and {y} share {e} across subtrees")
            elif set(e) != {t.parent[x], x, y}:
                problems.append(f"{x} and {y} share {e} besides their pair edge")
    return problems


def height_violations(t: DfsTree, k: int) -> List[str]:
    if t.height > k - 1:
        return [f"height {t.height} exceeds {k - 1}"]
    return []


def deep_pairs(t: DfsTree, k: int) -> List[tuple]:
    """Special pairs at depth k-1 of a tree of height k-1."""
    if t.height != k - 1:
        return []
    return list(t.special_pairs.get(k - 1, []))


def crowded_deep_pairs(h: Hypergraph, t: DfsTree, k: int) -> List[str]:
    """
    A special pair at depth k-1 of a tree of height k-1 in a hypergraph
    without Berge paths or cycles of length k has a member with fewer than k
    neighbors; so a tree of a hypergraph with k neighbors everywhere has no
    such pair.
    """
    adjacency = h.shadow_graph.adjacency
    return [
        f"deep special pair {pair} with >= {k} neighbors each"
        for pair in deep_pairs(t, k)
        if all(len(adjacency[v]) >= k for v in pair)
    ]
