"""Non-redundant generation of free trees by centroid decomposition.

A unicentroidal tree of order ``n`` is a multiset of rooted branches, each
with fewer than ``n/2`` vertices, hung from the centroid.  A bicentroidal
tree is an unordered pair of rooted halves of order ``n/2`` joined by the
centroidal edge.  Rooted trees are themselves multisets of smaller rooted
trees, listed in a fixed order, so every isomorphism class appears exactly
once and the stream order is reproducible.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Optional

from .graph import Graph, GraphError

MAX_ORDER = 26

# number of free trees on n vertices, n = 0..26
FREE_TREE_COUNTS = (
    1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
    48629, 123867, 317955, 823065, 2144505, 5623756, 14828074, 39299897,
    104636890, 279793450,
)


def _multisets(total: int, bound: tuple[int, int], max_size: int):
    """Non-increasing tuples of rooted-tree ids ``(size, index)`` with sizes
    summing to ``total``, every id at most ``bound``."""
    if total == 0:
        yield ()
        return
    for s in range(min(total, max_size, bound[0]), 0, -1):
        top = len(rooted_trees(s)) - 1 if s < bound[0] else min(bound[1], len(rooted_trees(s)) - 1)
        for i in range(top, -1, -1):
            for rest in _multisets(total - s, (s, i), max_size):
                yield ((s, i),) + rest


@lru_cache(maxsize=None)
def rooted_trees(k: int) -> tuple:
    """All rooted trees on ``k`` vertices, each as its tuple of child ids."""
    if k < 1:
        return ()
    if k == 1:
        return ((),)
    return tuple(_multisets(k - 1, (k - 1, 1 << 60), k - 1))


def _expand(item, edges: list, parent: Optional[int], counter: list) -> int:
    v = counter[0]
    counter[0] += 1
    if parent is not None:
        edges.append((parent, v))
    size, idx = item
    for child in rooted_trees(size)[idx]:
        _expand(child, edges, v, counter)
    return v


def rooted_tree_graph(size: int, idx: int) -> Graph:
    """Rooted tree ``(size, idx)`` as a graph with the root at vertex 0."""
    edges: list = []
    _expand((size, idx), edges, None, [0])
    return Graph(size, edges)


def _structures(n: int):
    if n == 1:
        yield ("u", ())
        return
    for branches in _multisets(n - 1, (n - 1, 1 << 60), (n - 1) // 2):
        yield ("u", branches)
    if n % 2 == 0:
        h = n // 2
        r = len(rooted_trees(h))
        for i in range(r):
            for j in range(i, r):
                yield ("b", ((h, i), (h, j)))


def _build(kind, items, n: int) -> Graph:
    edges: list = []
    counter = [0]
    if kind == "u":
        root = counter[0]
        counter[0] += 1
        for it in items:
            _expand(it, edges, root, counter)
    else:
        a = _expand(items[0], edges, None, counter)
        b = _expand(items[1], edges, None, counter)
        edges.append((a, b))
    return Graph(n, edges)


def generate_trees(n: int, workers: int = 1, worker: int = 0) -> Iterator[Graph]:
    """Yield one tree per isomorphism class of order ``n``.

    With ``workers = W`` only the trees whose stream index ``i`` satisfies
    ``i % W == worker`` are produced.
    """
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
    if workers < 1 or not 0 <= worker < workers:
        raise GraphError(f"bad chunk {worker}/{workers}")
    for i, (kind, items) in enumerate(_structures(n)):
        if i % workers == worker:
            yield _build(kind, items, n)


def count_trees(n: int) -> int:
    return sum(1 for _ in _structures(n))
