"""Slow reference implementations used only by the tests.

None of these touch the canonical labeler, so agreement with the library
is independent evidence.
"""

from __future__ import annotations

from itertools import product

from edgerecon.graph import Graph


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking search for an explicit edge-preserving bijection."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    gadj = [set(a) for a in g.adj]
    hadj = [set(a) for a in h.adj]
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or len(gadj[v]) != len(hadj[w]):
                continue
            if any((image[u] in hadj[w]) != (u in gadj[v]) for u in range(v)):
                continue
            image[v], used[w] = w, True
            if extend(v + 1):
                return True
            image[v], used[w] = -1, False
        return False

    return extend(0)


def brute_automorphic(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism maps ``u`` to ``v`` (explicit search)."""
    n = g.n
    adj = [set(a) for a in g.adj]
    image = [-1] * n
    used = [False] * n
    order = [u] + [x for x in range(n) if x != u]

    def extend(i: int) -> bool:
        if i == n:
            return True
        x = order[i]
        cands = [v] if i == 0 else range(n)
        for w in cands:
            if used[w] or len(adj[x]) != len(adj[w]):
                continue
            if any((image[y] in adj[w]) != (y in adj[x]) for y in order[:i]):
                continue
            image[x], used[w] = w, True
            if extend(i + 1):
                return True
            image[x], used[w] = -1, False
        return False

    return extend(0)


def prufer_decode(seq: tuple[int, ...]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [i for i in range(n) if degree[i] == 1]
    edges.append((u, w))
    return Graph(n, edges)


def all_labeled_trees(n: int):
    """Every labeled tree on ``n`` vertices (``n ** (n - 2)`` of them)."""
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq)


def grow_by_leaves(trees, key):
    """Unlabeled trees of the next order: add a leaf everywhere, dedup by ``key``."""
    out = {}
    for t in trees:
        for v in range(t.n):
            s = t.add_vertex([v])
            out.setdefault(key(s), s)
    return list(out.values())
