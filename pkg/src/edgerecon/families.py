"""Named tree families, the known small ern=3 trees, and explicit blockers.

Text syntax for specs: ``path:9``, ``spider:2,2,2``, ``cat:2,0,0,0,2`` (or
``cat:2,0^3,2``), ``tk:4``, ``bij:2,2,2,2``, ``cycle:5``,
``union(<spec>,<spec>)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union as _U

from .canon import canonical_code
from .graph import Graph, GraphError, cycle, norm_edge, path


class InvalidSpecError(GraphError):
    pass


class UnsupportedCaseError(GraphError):
    pass


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Spider:
    p: int
    q: int
    r: int


@dataclass(frozen=True)
class Caterpillar:
    leaves: tuple[int, ...]


@dataclass(frozen=True)
class Tk:
    k: int


@dataclass(frozen=True)
class BicentroidalJoin:
    p: int
    q: int
    r: int
    s: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Union:
    left: "FamilySpec"
    right: "FamilySpec"


@dataclass(frozen=True)
class RootedAttach:
    base: "FamilySpec"
    vertex: int
    rooted: "FamilySpec"
    root: int = 0


FamilySpec = _U[Path, Spider, Caterpillar, Tk, BicentroidalJoin, Cycle, Union, RootedAttach]


# -- construction ------------------------------------------------------------------


def _chain(edges, start, length, nxt):
    prev = start
    for _ in range(length):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    return nxt


def spider_graph(p: int, q: int, r: int) -> Graph:
    edges: list[tuple[int, int]] = []
    nxt = 1
    for leg in (p, q, r):
        nxt = _chain(edges, 0, leg, nxt)
    return Graph(nxt, edges)


def caterpillar_graph(leaves) -> Graph:
    s = len(leaves)
    edges = [(i, i + 1) for i in range(s - 1)]
    nxt = s
    for i, a in enumerate(leaves):
        for _ in range(a):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges)


def tk_graph(k: int) -> Graph:
    """Centre 0 joined to ``1..k``; each of those carries two leaves.

    ``k = 1`` (a star with three leaves) is allowed here because it occurs
    inside the blocker for ``T_2``.
    """
    edges = []
    nxt = k + 1
    for i in range(1, k + 1):
        edges += [(0, i), (i, nxt), (i, nxt + 1)]
        nxt += 2
    return Graph(nxt, edges)


def bicentroidal_join_graph(p: int, q: int, r: int, s: int) -> Graph:
    """Vertex ``a = 0`` with path arms of ``p`` and ``q`` edges, joined to
    vertex ``b = p + q + 1`` with arms of ``r`` and ``s`` edges."""
    edges: list[tuple[int, int]] = []
    nxt = _chain(edges, 0, p, 1)
    nxt = _chain(edges, 0, q, nxt)
    b = nxt
    nxt = _chain(edges, b, r, b + 1)
    nxt = _chain(edges, b, s, nxt)
    edges.append((0, b))
    return Graph(nxt, edges)


def _validate(spec) -> None:
    bad = None
    if isinstance(spec, Path):
        bad = spec.n < 1
    elif isinstance(spec, Spider):
        bad = min(spec.p, spec.q, spec.r) < 1
    elif isinstance(spec, Caterpillar):
        bad = len(spec.leaves) < 1 or min(spec.leaves) < 0
    elif isinstance(spec, Tk):
        bad = spec.k < 2
    elif isinstance(spec, BicentroidalJoin):
        bad = min(spec.p, spec.q, spec.r, spec.s) < 0
    elif isinstance(spec, Cycle):
        bad = spec.n < 3
    elif isinstance(spec, (Union, RootedAttach)):
        bad = False
    else:
        raise InvalidSpecError(f"unknown family spec {spec!r}")
    if bad:
        raise InvalidSpecError(f"parameters below legal minimum: {spec!r}")


def build(spec: FamilySpec) -> Graph:
    _validate(spec)
    if isinstance(spec, Path):
        return path(spec.n)
    if isinstance(spec, Spider):
        return spider_graph(spec.p, spec.q, spec.r)
    if isinstance(spec, Caterpillar):
        return caterpillar_graph(spec.leaves)
    if isinstance(spec, Tk):
        return tk_graph(spec.k)
    if isinstance(spec, BicentroidalJoin):
        return bicentroidal_join_graph(spec.p, spec.q, spec.r, spec.s)
    if isinstance(spec, Cycle):
        return cycle(spec.n)
    if isinstance(spec, Union):
        return build(spec.left).union(build(spec.right))
    base, rooted = build(spec.base), build(spec.rooted)
    if not (0 <= spec.vertex < base.n and 0 <= spec.root < rooted.n):
        raise InvalidSpecError(f"attachment vertex out of range: {spec!r}")
    from .trees import attach_rooted

    return attach_rooted(base, spec.vertex, rooted, spec.root)


# -- text syntax --------------------------------------------------------------------


def _ints(body: str) -> list[int]:
    out = []
    for tok in body.split(","):
        tok = tok.strip()
        if "^" in tok:
            val, rep = tok.split("^")
            out += [int(val)] * int(rep)
        elif tok:
            out.append(int(tok))
    return out


def parse_spec(text: str) -> FamilySpec:
    text = text.strip()
    try:
        if text.startswith("union(") and text.endswith(")"):
            inner = text[6:-1]
            depth = 0
            for i, ch in enumerate(inner):
                depth += (ch == "(") - (ch == ")")
                if ch == "," and depth == 0:
                    try:
                        return Union(parse_spec(inner[:i]), parse_spec(inner[i + 1:]))
                    except InvalidSpecError:
                        continue
            raise InvalidSpecError(f"cannot split union: {text!r}")
        kind, _, body = text.partition(":")
        vals = _ints(body)
        if kind == "path" and len(vals) == 1:
            spec = Path(vals[0])
        elif kind == "spider" and len(vals) == 3:
            spec = Spider(*vals)
        elif kind == "cat":
            spec = Caterpillar(tuple(vals))
        elif kind == "tk" and len(vals) == 1:
            spec = Tk(vals[0])
        elif kind == "bij" and len(vals) == 4:
            spec = BicentroidalJoin(*vals)
        elif kind == "cycle" and len(vals) == 1:
            spec = Cycle(vals[0])
        else:
            raise InvalidSpecError(f"unrecognised family spec {text!r}")
    except ValueError as exc:
        if isinstance(exc, InvalidSpecError):
            raise
        raise InvalidSpecError(f"bad family spec {text!r}: {exc}") from None
    _validate(spec)
    return spec


def format_spec(spec: FamilySpec) -> str:
    if isinstance(spec, Path):
        return f"path:{spec.n}"
    if isinstance(spec, Spider):
        return f"spider:{spec.p},{spec.q},{spec.r}"
    if isinstance(spec, Caterpillar):
        return "cat:" + ",".join(map(str, spec.leaves))
    if isinstance(spec, Tk):
        return f"tk:{spec.k}"
    if isinstance(spec, BicentroidalJoin):
        return f"bij:{spec.p},{spec.q},{spec.r},{spec.s}"
    if isinstance(spec, Cycle):
        return f"cycle:{spec.n}"
    if isinstance(spec, Union):
        return f"union({format_spec(spec.left)},{format_spec(spec.right)})"
    return repr(spec)


# -- catalogue of small ern = 3 trees ---------------------------------------------------


def even_diameter_caterpillar(d: int) -> Caterpillar:
    """``C(2,0,...,0,2)`` of diameter ``d`` (spine of ``d - 1`` vertices)."""
    if d < 3:
        raise InvalidSpecError("diameter must be at least 3")
    return Caterpillar((2,) + (0,) * (d - 3) + (2,))


KNOWN_ERN3 = (
    ("P5", Path(5)),
    ("P7", Path(7)),
    ("P9", Path(9)),
    ("P11", Path(11)),
    ("S222", Spider(2, 2, 2)),
    ("S333", Spider(3, 3, 3)),
    ("C(2,2)", Caterpillar((2, 2))),
    ("C(2,0,2)", Caterpillar((2, 0, 2))),
    ("C(1,0,1,0,1)", Caterpillar((1, 0, 1, 0, 1))),
    ("C(2,1,2)", Caterpillar((2, 1, 2))),
    ("C(2,0^3,2)", Caterpillar((2, 0, 0, 0, 2))),
    ("C(2,3,2)", Caterpillar((2, 3, 2))),
    ("C(2,1,1,2)", Caterpillar((2, 1, 1, 2))),
    ("C(1,0,1,0,1,0,1)", Caterpillar((1, 0, 1, 0, 1, 0, 1))),
    ("C(2,0^5,2)", Caterpillar((2, 0, 0, 0, 0, 0, 2))),
    ("G1", Tk(3)),
    ("G2", BicentroidalJoin(2, 2, 2, 2)),
)

CATALOG_RANGE = (4, 11)


def known_ern3_catalog(n: int) -> list[Graph]:
    lo, hi = CATALOG_RANGE
    if not lo <= n <= hi:
        raise GraphError(f"catalogue covers orders {lo}..{hi}, not {n}")
    return [g for _, g in known_ern3_named(n)]


def known_ern3_named(n: int) -> list[tuple[str, Graph]]:
    out = []
    for name, spec in KNOWN_ERN3:
        g = build(spec)
        if g.n == n:
            out.append((name, g))
    return out


def conjectured_family_members(n: int) -> dict[str, Graph]:
    """Members of order ``n`` of the three conjectured infinite ern = 3 families."""
    out = {}
    if n >= 5 and n % 2 == 1:
        out["odd-path"] = path(n)
    d = n - 3
    if d >= 4 and d % 2 == 0:
        out["even-diam-cat"] = build(even_diameter_caterpillar(d))
    if n >= 7 and (n - 1) % 3 == 0:
        out["tk"] = tk_graph((n - 1) // 3)
    return out


# -- blockers ---------------------------------------------------------------------


@dataclass(frozen=True)
class BlockerCertificate:
    target: bytes
    blocker: Graph
    cards: tuple[bytes, bytes]
    edges: tuple[tuple[int, int], tuple[int, int]]
    label: str = ""

    def problems(self) -> list[str]:
        out = []
        if canonical_code(self.blocker) == self.target:
            out.append("blocker is isomorphic to the target")
        if norm_edge(*self.edges[0]) == norm_edge(*self.edges[1]):
            out.append("blocker edges coincide")
        for e, card in zip(self.edges, self.cards):
            if norm_edge(*e) not in self.blocker.edges:
                out.append(f"edge {e} missing from blocker")
            elif canonical_code(self.blocker.delete_edge(*e)) != card:
                out.append(f"deleting {e} does not give the target card")
        return out

    @property
    def valid(self) -> bool:
        return not self.problems()


def _certificate(target: Graph, target_edges, blocker: Graph, blocker_edges, label):
    cards = tuple(canonical_code(target.delete_edge(*e)) for e in target_edges)
    cert = BlockerCertificate(canonical_code(target), blocker, cards,
                              tuple(norm_edge(*e) for e in blocker_edges), label)
    bad = cert.problems()
    if bad:
        raise AssertionError(f"blocker {label} failed validation: {bad}")
    return cert


def _path_blocker(n: int, pair) -> BlockerCertificate:
    if n < 5 or n % 2 == 0:
        raise UnsupportedCaseError("path blockers exist only for odd n >= 5")
    s = (n - 1) // 2
    i, j = pair
    if i == j or not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise UnsupportedCaseError(f"bad edge pair {pair} for P_{n}")
    target = path(n)
    target_edges = [(i - 1, i), (j - 1, j)]
    p, q = min(i, n - i), min(j, n - j)
    if (p, q) == (s, s):
        c = 3 if s == 2 else s
        blocker = cycle(c).union(path(n - c))
        return _certificate(target, target_edges, blocker, [(0, 1), (1, 2)],
                            f"C{c}+P{n - c}")
    r = 2 * s - p - q
    blocker = spider_graph(p, q, r)
    # the centre edge of leg p is (0, 1); leg q starts at vertex p + 1
    return _certificate(target, target_edges, blocker, [(0, 1), (0, p + 1)],
                        f"S{p},{q},{r}")


def caterpillar_layout(d: int) -> Graph:
    """``C(2,0,...,0,2)`` with longest path ``v_0..v_d`` as vertices ``0..d``,
    extra leaf ``x = d+1`` at ``v_1`` and ``y = d+2`` at ``v_{d-1}``."""
    return Graph(d + 3, [(i, i + 1) for i in range(d)] + [(1, d + 1), (d - 1, d + 2)])


def _caterpillar_blocker(d: int, pair) -> BlockerCertificate:
    if d < 4 or d % 2:
        raise UnsupportedCaseError("caterpillar blockers need even diameter >= 4")
    C = caterpillar_layout(d)
    half = d // 2
    for i in pair:
        if not 1 <= i <= d:
            raise UnsupportedCaseError(f"F index {i} out of range 1..{d}")
    j, i = sorted(min(k, d + 1 - k) for k in pair)
    x = d + 1

    def F(k):
        return (k - 1, k)

    if d == 4:
        if (j, i) == (1, 1):
            X, es, lab = C.delete_edge(*F(1)).add_edge(0, 3), [(0, 3), (3, 4)], "F1F1"
        elif (j, i) == (1, 2):
            X, es, lab = C.delete_edge(*F(1)).add_edge(0, 3), [(0, 3), (2, 3)], "F1F2"
        else:
            X, es, lab = C.delete_edge(*F(2)).add_edge(0, x), [(0, x), (1, x)], "F2F2"
        fi = [F(j), F(i)]
    elif (j, i) == (1, 1):
        X, es, lab = C.delete_edge(*F(1)).add_edge(0, d - 1), [(0, d - 1), (d - 1, d)], "F1F1"
        fi = [F(1), F(1)]
    elif j == 1:
        X = C.delete_edge(*F(1)).add_edge(0, d - i - 1)
        es, lab = [(0, d - i - 1), (d - i, d - i + 1)], f"F1F{i}"
        fi = [F(1), F(i)]
    elif (j, i) == (half, half):
        X = C.delete_edge(*F(half)).add_edge(half + 1, d)
        es, lab = [(half + 1, d), (d - 1, d)], f"F{half}F{half}"
        fi = [F(half), F(half)]
    else:
        X = C.delete_edge(*F(j)).add_edge(j - 1, d - i)
        es, lab = [(j - 1, d - i), (d - i, d - i + 1)], f"F{j}F{i}"
        fi = [F(j), F(i)]
    return _certificate(C, fi, X, es, f"C(2,0^{d - 3},2):{lab}")


def _tk_blocker(k: int, pair) -> BlockerCertificate:
    if tuple(pair) != ("center", "center"):
        raise UnsupportedCaseError("only the centre-edge pair has a named T_k blocker")
    target = tk_graph(k)
    blocker = tk_graph(k - 1).union(cycle(3))
    m = tk_graph(k - 1).n
    return _certificate(target, [(0, 1), (0, 2)], blocker, [(m, m + 1), (m + 1, m + 2)],
                        f"T{k - 1}+C3")


def blocker_for(family: FamilySpec, cardpair) -> BlockerCertificate:
    """Blocker from the ern = 3 proofs for the given pair of edge-cards.

    ``cardpair`` is ``(i, j)`` with 1-based edge indices ``e_i`` along the
    path for ``Path``, ``(i, j)`` indices of the forests ``F_i`` for the even
    diameter caterpillar ``C(2,0,...,0,2)``, and ``("center", "center")`` for
    ``Tk``.
    """
    _validate(family)
    if isinstance(family, Path):
        return _path_blocker(family.n, cardpair)
    if isinstance(family, Caterpillar):
        a = family.leaves
        if len(a) >= 3 and a[0] == a[-1] == 2 and not any(a[1:-1]):
            return _caterpillar_blocker(len(a) + 1, cardpair)
    if isinstance(family, Tk):
        return _tk_blocker(family.k, cardpair)
    raise UnsupportedCaseError(f"no blocker construction for {family!r}")


def blocker_cases(family: FamilySpec) -> list:
    """Every card pair ``blocker_for`` accepts for ``family``."""
    if isinstance(family, Path):
        n = family.n
        return [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    if isinstance(family, Caterpillar):
        d = len(family.leaves) + 1
        h = d // 2
        return [(j, i) for j in range(1, h + 1) for i in range(j, h + 1)]
    if isinstance(family, Tk):
        return [("center", "center")]
    raise UnsupportedCaseError(f"no blocker construction for {family!r}")

