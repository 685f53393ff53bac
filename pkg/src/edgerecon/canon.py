"""Canonical labeling and isomorphism testing for small graphs.

A canonical code is the graph6 string of a canonically relabeled copy of the
graph, so two graphs share a code exactly when they are isomorphic.  Vertex
marks (colour classes) are honoured: automorphisms must preserve them, and a
marked code carries the mark sequence after a ``#`` separator (outside the graph6 alphabet).

Components are labeled independently and concatenated in sorted order.  Tree
components use AHU strings rooted at the centre, unicyclic components use the
least rotation/reflection of the cycle's sequence of hanging-tree strings, and
everything else goes through colour refinement plus individualisation
backtracking (``method="general"`` forces the latter for every component).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import Graph, GraphError, from_graph6, norm_edge


@dataclass(frozen=True)
class MarkedGraph:
    graph: Graph
    marks: Mapping[int, int] = field(default_factory=dict)


# -- tree and unicyclic components --------------------------------------------


def _center(adj, verts):
    if len(verts) <= 2:
        return list(verts)
    deg = {v: len(adj[v]) for v in verts}
    layer = [v for v in verts if deg[v] <= 1]
    remaining = len(verts)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _rooted(adj, root, blocked, lab):
    """AHU strings for the tree hanging from ``root`` avoiding ``blocked``.

    Returns ``(code_of_root, preorder)`` where the preorder visits children in
    increasing code order.
    """
    parent = {root: None}
    order = [root]
    for x in order:
        for y in adj[x]:
            if y not in parent and y not in blocked:
                parent[y] = x
                order.append(y)
    code = {}
    kids = {}
    for x in reversed(order):
        ch = [y for y in adj[x] if parent.get(y, -1) == x and y != root]
        if len(ch) > 1:
            ch.sort(key=code.__getitem__)
        kids[x] = ch
        code[x] = "(" + lab(x) + "".join([code[y] for y in ch]) + ")"
    pre = []
    stack = [root]
    while stack:
        x = stack.pop()
        pre.append(x)
        stack.extend(reversed(kids[x]))
    return code[root], pre


def _tree_component(adj, verts, lab):
    c = _center(adj, verts)
    if len(c) == 1:
        code, pre = _rooted(adj, c[0], (), lab)
        return "T" + code, pre
    a, b = c
    ca, pa = _rooted(adj, a, (b,), lab)
    cb, pb = _rooted(adj, b, (a,), lab)
    if cb < ca:
        ca, pa, cb, pb = cb, pb, ca, pa
    return "E" + ca + cb, pa + pb


def _unicyclic_component(adj, verts, lab):
    deg = {v: len(adj[v]) for v in verts}
    stack = [v for v in verts if deg[v] == 1]
    gone = set()
    while stack:
        v = stack.pop()
        gone.add(v)
        for w in adj[v]:
            if w not in gone:
                deg[w] -= 1
                if deg[w] == 1:
                    stack.append(w)
    cyc_set = set(verts) - gone
    start = min(cyc_set)
    cyc = [start]
    prev = None
    cur = start
    while True:
        nxt = next(w for w in adj[cur] if w in cyc_set and w != prev)
        if nxt == start:
            break
        # first step can go either way; subsequent ones are forced
        prev, cur = cur, nxt
        cyc.append(cur)
        if len(cyc) > len(cyc_set):
            raise AssertionError("cycle walk failed")
    hang = [_rooted(adj, v, cyc_set, lab) for v in cyc]
    codes = [h[0] for h in hang]
    k = len(cyc)
    best = None
    best_idx = None
    for seq_idx in (list(range(k)), list(range(k - 1, -1, -1))):
        for r in range(k):
            idx = seq_idx[r:] + seq_idx[:r]
            cand = tuple(codes[i] for i in idx)
            if best is None or cand < best:
                best, best_idx = cand, idx
    pre = []
    for i in best_idx:
        pre.extend(hang[i][1])
    return "U" + "".join(best), pre


# -- general components: refinement + backtracking ------------------------------


def _refine(col, verts, adj):
    vals = sorted(set(col.values()))
    rank0 = {c: i for i, c in enumerate(vals)}
    col = {v: rank0[col[v]] for v in verts}
    ncol = len(vals)
    while True:
        sig = {v: (col[v], tuple(sorted([col[w] for w in adj[v]]))) for v in verts}
        keys = sorted(set(sig.values()))
        if len(keys) == ncol:
            return col
        rank = {s: i for i, s in enumerate(keys)}
        col = {v: rank[sig[v]] for v in verts}
        ncol = len(keys)


def _general_component(adj, verts, cls):
    vs = sorted(verts)
    k = len(vs)
    marks0 = sorted(set(cls[v] for v in vs))
    col = {v: marks0.index(cls[v]) for v in vs}
    twin_rep = {}
    for v in vs:
        for u in vs:
            if u >= v:
                break
            if cls[u] == cls[v] and set(adj[u]) - {v} == set(adj[v]) - {u}:
                twin_rep[v] = twin_rep.get(u, u)
                break
    best = [None, None]

    def search(col):
        col = _refine(col, vs, adj)
        cells: dict[int, list[int]] = {}
        for v in vs:
            cells.setdefault(col[v], []).append(v)
        if len(cells) == k:
            cert = tuple(sorted(
                norm_edge(col[u], col[w]) for u in vs for w in adj[u] if u < w
            ))
            if best[0] is None or cert < best[0]:
                best[0] = cert
                best[1] = sorted(vs, key=col.__getitem__)
            return
        size = min(len(c) for c in cells.values() if len(c) > 1)
        target = min(c for c, members in cells.items() if len(members) == size)
        tried = set()
        for v in cells[target]:
            rep = twin_rep.get(v, v)
            if rep in tried:
                continue
            tried.add(rep)
            tried.add(v)
            ind = {w: 2 * c + (0 if w == v else 1) for w, c in col.items()}
            search(ind)

    search(col)
    cert, order = best
    key = "G" + ";".join(f"{a},{b}" for a, b in cert)
    return key, order


# -- assembly -------------------------------------------------------------------


def _components(n, adj):
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        for x in comp:
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
        out.append(comp)
    return out


def _canonical_order(n, adj, cls=None, method="auto"):
    if method not in ("auto", "general"):
        raise ValueError(f"unknown canonicalization method {method!r}")
    if cls is None:
        lab = _nolab
        gcls = _ZERO
    else:
        def lab(v):
            c = cls.get(v, 0)
            return str(c) if c else ""
        gcls = _Marks(cls)
    entries = []
    for comp in _components(n, adj):
        k = len(comp)
        m2 = sum(len(adj[v]) for v in comp)
        if method == "auto" and m2 == 2 * (k - 1):
            key, order = _tree_component(adj, comp, lab)
        elif method == "auto" and m2 == 2 * k:
            key, order = _unicyclic_component(adj, comp, lab)
        else:
            key, order = _general_component(adj, comp, gcls)
            if cls is not None:
                key += "|" + ",".join(str(cls.get(v, 0)) for v in order)
        entries.append((k, key, order))
    entries.sort(key=lambda e: (e[0], e[1]))
    return [v for e in entries for v in e[2]]


def _nolab(v):
    return ""


class _Zero(dict):
    def __missing__(self, key):
        return 0


_ZERO = _Zero()


class _Marks(dict):
    def __missing__(self, key):
        return 0


def _graph6_relabeled(n, edges, pos):
    total = n * (n - 1) // 2
    nbytes = (total + 5) // 6
    width = 6 * nbytes
    bits = 0
    for u, v in edges:
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        bits |= 1 << (width - 1 - (j * (j - 1) // 2 + i))
    head = bytes([n + 63]) if n <= 62 else None
    if head is None:
        head = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    body = bytes(((bits >> (width - 6 * (t + 1))) & 63) + 63 for t in range(nbytes))
    return head + body


def _unpack(g):
    if isinstance(g, MarkedGraph):
        marks = {v: c for v, c in g.marks.items() if c}
        return g.graph, (marks or None)
    return g, None


def canonical_labeling(g: Graph | MarkedGraph, method: str = "auto") -> list[int]:
    """Return ``pos`` with ``pos[v]`` the canonical label of vertex ``v``."""
    graph, marks = _unpack(g)
    order = _canonical_order(graph.n, graph.adj, marks, method)
    pos = [0] * graph.n
    for i, v in enumerate(order):
        pos[v] = i
    return pos


def canonical_code(g: Graph | MarkedGraph, marks: Mapping[int, int] | None = None,
                   method: str = "auto") -> bytes:
    """Canonical code of ``g`` (optionally with vertex colour classes)."""
    if marks is not None:
        g = MarkedGraph(g if isinstance(g, Graph) else g.graph, marks)
    graph, cls = _unpack(g)
    if cls is not None:
        for v in cls:
            if not (0 <= v < graph.n):
                raise GraphError(f"mark on invalid vertex {v}")
    order = _canonical_order(graph.n, graph.adj, cls, method)
    pos = [0] * graph.n
    for i, v in enumerate(order):
        pos[v] = i
    code = _graph6_relabeled(graph.n, graph.edges, pos)
    if cls is not None:
        code += b"#" + ",".join(str(cls.get(v, 0)) for v in order).encode()
    return code


def code_of_adj(n: int, adj: Sequence[Sequence[int]]) -> bytes:
    """Canonical code straight from adjacency lists (no Graph construction)."""
    order = _canonical_order(n, adj)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    edges = [(u, w) for u in range(n) for w in adj[u] if u < w]
    return _graph6_relabeled(n, edges, pos)


def decode(code: bytes) -> Graph:
    """Graph (marks dropped) represented by a canonical code."""
    return from_graph6(code.split(b"#", 1)[0])


def canonical_form(g: Graph) -> Graph:
    return decode(canonical_code(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)


def similar(g: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``g`` maps ``u`` to ``v``."""
    for x in (u, v):
        if not (isinstance(x, int) and 0 <= x < g.n):
            raise GraphError(f"invalid vertex {x!r}")
    if u == v:
        return True
    return canonical_code(g, {u: 1}) == canonical_code(g, {v: 1})


def similar_edges(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True iff some automorphism of ``g`` maps edge ``e`` onto edge ``f``."""
    for x in (e, f):
        if norm_edge(*x) not in g.edges:
            raise GraphError(f"edge {x} not in graph")
    return canonical_code(g, dict.fromkeys(e, 1)) == canonical_code(g, dict.fromkeys(f, 1))


def edge_orbits(g: Graph) -> list[list[tuple[int, int]]]:
    """Partition the edges of ``g`` into automorphism orbits."""
    groups: dict[bytes, list[tuple[int, int]]] = {}
    for e in g.sorted_edges():
        groups.setdefault(canonical_code(g, dict.fromkeys(e, 1)), []).append(e)
    return list(groups.values())


def vertex_orbits(g: Graph) -> list[list[int]]:
    groups: dict[bytes, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(canonical_code(g, {v: 1}), []).append(v)
    return list(groups.values())
