"""Simple undirected graphs on dense vertex ids, plus graph6 / edge-list I/O."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for invalid vertices, edges or malformed encodings."""


def norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are stored normalized (``u < v``) in a frozenset; sorted neighbour
    tuples are kept alongside for traversal.
    """

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative order {n}")
        es = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} out of range for n={n}")
            es.add(norm_edge(u, v))
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in es:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(tuple(sorted(x)) for x in nbrs)
        self._hash = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (u, v) not in self.edges:
                    yield (u, v)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adj[v]) == 1]

    # -- editing (always returns a new graph) --------------------------------

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"invalid vertex {v!r} for n={self.n}")

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        e = norm_edge(u, v)
        if u == v or e in self.edges:
            raise GraphError(f"cannot add edge {e}")
        return Graph(self.n, self.edges | {e})

    def delete_edge(self, u: int, v: int) -> "Graph":
        e = norm_edge(u, v)
        if e not in self.edges:
            raise GraphError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)

        def r(x: int) -> int:
            return x - 1 if x > v else x

        return Graph(self.n - 1, ((r(a), r(b)) for a, b in self.edges if v not in (a, b)))

    def add_vertex(self, attach_to: Iterable[int] = ()) -> "Graph":
        """Append vertex ``n`` joined to each vertex in ``attach_to``."""
        new = self.n
        return Graph(self.n + 1, list(self.edges) + [(u, new) for u in attach_to])

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = sorted(vertices)
        idx = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), ((idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx))

    def union(self, other: "Graph") -> "Graph":
        k = self.n
        return Graph(k + other.n, list(self.edges) + [(u + k, v + k) for u, v in other.edges])

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def edit(g: Graph, op: str, target) -> Graph:
    """Apply ``add-edge``, ``delete-edge`` or ``delete-vertex`` to ``g``."""
    if op == "add-edge":
        return g.add_edge(*target)
    if op == "delete-edge":
        return g.delete_edge(*target)
    if op == "delete-vertex":
        return g.delete_vertex(target)
    raise GraphError(f"unknown edit op {op!r}")


@dataclass(frozen=True)
class ComponentPartition:
    parts: tuple[tuple[int, ...], ...]

    @property
    def orders(self) -> Counter:
        return Counter(len(p) for p in self.parts)

    def sorted_orders(self) -> tuple[int, ...]:
        return tuple(sorted(len(p) for p in self.parts))

    def __len__(self) -> int:
        return len(self.parts)


def components(g: Graph) -> ComponentPartition:
    seen = [False] * g.n
    parts = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, part = [s], [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
                    part.append(y)
        parts.append(tuple(sorted(part)))
    return ComponentPartition(tuple(parts))


def classify(g: Graph) -> str:
    """Return ``"tree"``, ``"forest"`` or ``"has-cycle"``."""
    k = len(components(g))
    # a graph is acyclic iff m = n - (number of components)
    if g.m != g.n - k:
        return "has-cycle"
    return "tree" if k == 1 else "forest"


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    return classify(g) != "has-cycle"


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


# -- graph6 ------------------------------------------------------------------


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise GraphError(f"graph6 order too large: {n}")


def to_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((i, j) in g.edges)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def from_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data or any(c < 63 or c > 126 for c in data):
        raise GraphError(f"malformed graph6 string {data!r}")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise GraphError("unsupported graph6 size prefix")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body length {len(body)} != {need} for n={n}")
    bits = []
    for c in body:
        x = c - 63
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# -- plain edge list -----------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with 'n m'")
    n, m = map(int, rows[0])
    if len(rows) - 1 != m:
        raise GraphError(f"expected {m} edges, got {len(rows) - 1}")
    return Graph(n, [(int(a), int(b)) for a, b in rows[1:]])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
