"""Structural notions for trees: centroid, centre, pseudopaths, replaceable
end-edges, bicentroidal profiles, conjugate pairs and Molina's two-card test."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .canon import canonical_code
from .graph import Graph, GraphError, components, is_tree


class NotATreeError(GraphError):
    pass


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATreeError(f"not a tree: {t!r}")


def _bfs(t: Graph, s: int) -> list[int]:
    dist = [-1] * t.n
    dist[s] = 0
    queue = [s]
    for x in queue:
        for y in t.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


# -- centroid ------------------------------------------------------------------


@dataclass(frozen=True)
class CentroidInfo:
    kind: str  # "unicentroidal" | "bicentroidal"
    vertices: tuple[int, ...]
    weight: int
    centroidal_edge: Optional[tuple[int, int]] = None
    component_orders: Optional[tuple[int, int]] = None

    @property
    def bicentroidal(self) -> bool:
        return self.kind == "bicentroidal"


def weights(t: Graph) -> list[int]:
    """``wt(v)``: order of a largest component of ``t - v``."""
    _require_tree(t)
    n = t.n
    if n == 1:
        return [0]
    parent = [-1] * n
    order = [0]
    parent[0] = 0
    for x in order:
        for y in t.adj[x]:
            if parent[y] < 0:
                parent[y] = x
                order.append(y)
    size = [1] * n
    biggest = [0] * n
    for x in reversed(order[1:]):
        p = parent[x]
        size[p] += size[x]
        biggest[p] = max(biggest[p], size[x])
    return [max(biggest[v], n - size[v]) for v in range(n)]


def centroid(t: Graph) -> CentroidInfo:
    w = weights(t)
    best = min(w)
    cv = tuple(v for v in range(t.n) if w[v] == best)
    if len(cv) == 1:
        return CentroidInfo("unicentroidal", cv, best)
    a, b = cv
    if len(cv) != 2 or not t.has_edge(a, b):
        raise AssertionError(f"centroid {cv} is not one vertex or an edge")
    orders = components(t.delete_edge(a, b)).sorted_orders()
    return CentroidInfo("bicentroidal", cv, best, (a, b), orders)


def metrics(t: Graph) -> tuple[int, list[int], tuple[int, ...]]:
    """Return ``(diameter, eccentricities, centre)``."""
    _require_tree(t)
    ecc = [max(_bfs(t, v)) for v in range(t.n)]
    r = min(ecc)
    return max(ecc), ecc, tuple(v for v in range(t.n) if ecc[v] == r)


def diameter(t: Graph) -> int:
    return metrics(t)[0]


def longest_path(t: Graph) -> list[int]:
    """A longest path as a vertex list (double-sweep)."""
    _require_tree(t)
    d0 = _bfs(t, 0)
    u = max(range(t.n), key=d0.__getitem__)
    du = _bfs(t, u)
    w = max(range(t.n), key=du.__getitem__)
    out = [w]
    while out[-1] != u:
        x = out[-1]
        out.append(next(y for y in t.adj[x] if du[y] == du[x] - 1))
    return out[::-1]


def end_cutvertices(t: Graph) -> list[int]:
    """Cutvertices adjacent to exactly one vertex of degree greater than one."""
    _require_tree(t)
    out = []
    for v in range(t.n):
        if len(t.adj[v]) < 2:
            continue
        if sum(1 for w in t.adj[v] if len(t.adj[w]) > 1) == 1:
            out.append(v)
    return out


def is_caterpillar(t: Graph) -> bool:
    _require_tree(t)
    inner = [v for v in range(t.n) if len(t.adj[v]) > 1]
    if not inner:
        return True
    ins = set(inner)
    return all(sum(1 for w in t.adj[v] if w in ins) <= 2 for v in inner)


# -- pseudopaths and replaceability ----------------------------------------------


@dataclass(frozen=True)
class PseudopathClass:
    kind: str  # "path" | "S1" | "S2" | "not-pseudopath"
    parameter: Optional[int] = None


def spider(p: int, q: int, r: int) -> Graph:
    edges = []
    nxt = 1
    for leg in (p, q, r):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


_S1 = canonical_code(spider(1, 1, 2))
_S2 = canonical_code(spider(1, 2, 3))


def classify_pseudopath(t: Graph) -> PseudopathClass:
    _require_tree(t)
    if max(t.degrees(), default=0) <= 2:
        return PseudopathClass("path", t.n)
    if t.n == 5 and canonical_code(t) == _S1:
        return PseudopathClass("S1")
    if t.n == 7 and canonical_code(t) == _S2:
        return PseudopathClass("S2")
    return PseudopathClass("not-pseudopath")


def is_pseudopath(t: Graph) -> bool:
    return classify_pseudopath(t).kind != "not-pseudopath"


def end_edges(t: Graph) -> list[tuple[int, int, int]]:
    """All end-edges as ``(x, v)`` pairs normalized, with the endvertex:
    returns ``(u, w, leaf)`` where ``(u, w)`` is the normalized edge."""
    out = []
    for e in t.sorted_edges():
        for leaf in e:
            if len(t.adj[leaf]) == 1:
                out.append((e[0], e[1], leaf))
    return out


def _moves(t: Graph, x: int, v: int):
    """Codes of ``t - xv + yv`` for every ``y`` not in ``{x, v}``."""
    base = t.delete_edge(x, v)
    for y in range(t.n):
        if y != x and y != v:
            yield y, canonical_code(base.add_edge(y, v))


def end_edge_replaceability(t: Graph) -> dict[tuple[int, int, int], bool]:
    """Map each end-edge ``(u, w, leaf)`` to True iff it is replaceable."""
    _require_tree(t)
    if t.n < 2:
        raise GraphError("need at least one edge")
    target = canonical_code(t)
    out = {}
    for u, w, leaf in end_edges(t):
        x = w if leaf == u else u
        out[(u, w, leaf)] = any(c == target for _, c in _moves(t, x, leaf))
    return out


def irreplaceable_end_edges(t: Graph) -> list[tuple[int, int, int]]:
    return [e for e, ok in end_edge_replaceability(t).items() if not ok]


# -- bicentroidal trees -----------------------------------------------------------


@dataclass(frozen=True)
class BicentroidalProfile:
    a: int
    b: int
    componentG: bytes
    componentH: bytes
    degA: int
    degB: int
    G: Graph
    H: Graph
    a_in_G: int
    b_in_H: int
    path_type: Optional[tuple[int, int, int, int]] = None


def _side(t: Graph, root: int, avoid: int):
    """Vertices of the component of ``t - root·avoid`` containing ``root``."""
    seen = {root}
    stack = [root]
    while stack:
        x = stack.pop()
        for y in t.adj[x]:
            if y != avoid and y not in seen:
                seen.add(y)
                stack.append(y)
    return sorted(seen)


def _arms(g: Graph, v: int) -> tuple[int, int]:
    d = _bfs(g, v)
    ends = [x for x in range(g.n) if len(g.adj[x]) <= 1]
    ds = sorted(d[x] for x in ends)
    if g.n == 1:
        return (0, 0)
    if len(g.adj[v]) == 1:
        return (0, ds[-1])
    return (ds[0], ds[1])


def bicentroidal_profile(t: Graph) -> BicentroidalProfile:
    info = centroid(t)
    if not info.bicentroidal:
        raise GraphError("tree is not bicentroidal")
    x, y = info.vertices
    sx, sy = _side(t, x, y), _side(t, y, x)
    gx, gy = t.induced(sx), t.induced(sy)
    rx = canonical_code(gx, {sx.index(x): 1})
    ry = canonical_code(gy, {sy.index(y): 1})
    if ry < rx:
        x, y, sx, sy, gx, gy = y, x, sy, sx, gy, gx
    ax, by = sx.index(x), sy.index(y)
    ptype = None
    if max(gx.degrees(), default=0) <= 2 and max(gy.degrees(), default=0) <= 2:
        ptype = _arms(gx, ax) + _arms(gy, by)
    return BicentroidalProfile(
        a=x, b=y,
        componentG=canonical_code(gx), componentH=canonical_code(gy),
        degA=t.degree(x), degB=t.degree(y),
        G=gx, H=gy, a_in_G=ax, b_in_H=by, path_type=ptype,
    )


# -- conjugate pairs ---------------------------------------------------------------


@dataclass(frozen=True)
class ConjugateWitness:
    """Witness for a conjugate pair.

    ``e1`` is the vertex of ``G - a`` (labels of ``G``) receiving the new
    end-edge; ``e2`` the end-edge of ``G`` whose endvertex is dropped after
    adding ``aa'``.  ``e3``/``e4`` are the same for ``H`` and ``b``.
    """

    a: int
    b: int
    e1: int
    e2: tuple[int, int]
    e3: int
    e4: tuple[int, int]


def _leaf_swap_codes(g: Graph, a: int):
    """For endvertex ``a``: yield ``("1", y, code)`` for ``g - a`` plus a new
    leaf at ``y``, and ``("2", edge, code)`` for ``g + aa'`` minus the
    endvertex of another end-edge."""
    # move a to y: identical to deleting a then attaching a fresh leaf at y
    x = g.adj[a][0]
    base = g.delete_edge(x, a)
    for y in range(g.n):
        if y != a:
            yield "1", y, canonical_code(base.add_edge(y, a))
    plus = g.add_vertex([a])
    for u, w, leaf in end_edges(g):
        if leaf == a:
            continue
        yield "2", (u, w), canonical_code(plus.delete_vertex(leaf))


def conjugate_half(g: Graph, a: int, target: bytes):
    """``(e1, e2)`` for ``g`` and ``a``: moving ``a`` to ``e1``, and hanging a
    leaf on ``a`` then deleting the endvertex of end-edge ``e2``, both give the
    tree with code ``target``.  None if either is missing."""
    e1 = e2 = None
    for kind, what, code in _leaf_swap_codes(g, a):
        if code != target:
            continue
        if kind == "1" and e1 is None:
            e1 = what
        elif kind == "2" and e2 is None:
            e2 = what
        if e1 is not None and e2 is not None:
            return e1, e2
    return None


def conjugate_partners(g: Graph) -> set[bytes]:
    """Codes of trees ``h`` such that some endvertex ``a`` of ``g`` satisfies
    both leaf-swap conditions of a conjugate pair for ``(g, h)``."""
    _require_tree(g)
    out: set[bytes] = set()
    for a in g.leaves():
        ones, twos = set(), set()
        for kind, _, code in _leaf_swap_codes(g, a):
            (ones if kind == "1" else twos).add(code)
        out |= ones & twos
    out.discard(canonical_code(g))
    return out


def conjugate_pair_witness(g: Graph, h: Graph) -> Optional[ConjugateWitness]:
    _require_tree(g)
    _require_tree(h)
    if g.n != h.n or g.n < 2:
        return None
    cg, ch = canonical_code(g), canonical_code(h)
    if cg == ch:
        return None
    for a in g.leaves():
        first = conjugate_half(g, a, ch)
        if first is None:
            continue
        for b in h.leaves():
            second = conjugate_half(h, b, cg)
            if second is not None:
                return ConjugateWitness(a, b, first[0], first[1], second[0], second[1])
        return None
    return None


# -- Molina's lemma -------------------------------------------------------------------


def molina_recognizer(c1: Graph, c2: Graph) -> str:
    """``"tree-forced"`` if two edge-cards force the source graph to be a tree."""
    if c1.n != c2.n or c1.m != c2.m:
        raise GraphError("cards differ in order or size")
    orders = []
    for c in (c1, c2):
        parts = components(c)
        if len(parts) != 2:
            return "inconclusive"
        if c.m != c.n - 2:  # two components; acyclic iff m = n - 2
            return "inconclusive"
        orders.append(parts.sorted_orders())
    return "tree-forced" if orders[0] != orders[1] else "inconclusive"


# -- rooted attachment (Krasikov's construction) ---------------------------------------


def attach_rooted(t: Graph, at: int, rooted: Graph, root: int) -> Graph:
    """Identify ``root`` of ``rooted`` with vertex ``at`` of ``t``."""
    k = t.n
    mp = {}
    nxt = k
    for v in range(rooted.n):
        if v == root:
            mp[v] = at
        else:
            mp[v] = nxt
            nxt += 1
    return Graph(nxt, list(t.edges) + [(mp[u], mp[v]) for u, v in rooted.edges])


def removal_similar(g: Graph, u: int, v: int) -> bool:
    return canonical_code(g.delete_vertex(u)) == canonical_code(g.delete_vertex(v))

