"""Edge-reconstruction number of trees by pairwise card extension.

For every pair of edges ``e1, e2`` of a tree ``T`` the graphs having both
cards ``T - e1`` and ``T - e2`` are the common one-edge extensions of the two
cards.  When the two cards are isomorphic a candidate must contain that card
twice.  ``ern(T) = 2`` as soon as some pair leaves no candidate other than
``T``; otherwise ``ern(T) = 3`` (Molina's upper bound for trees with at least
four edges).
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional

from .canon import canonical_code, code_of_adj, decode
from .graph import Graph, GraphError, is_tree, norm_edge

Edge = tuple[int, int]
EdgePair = tuple[Edge, Edge]


class TooSmallError(GraphError):
    pass


@dataclass(frozen=True)
class ExtensionSet:
    card_code: bytes
    members: frozenset
    raw_count: int


@dataclass
class ErnResult:
    value: int
    witness: Optional[EdgePair]
    blockers: dict = field(default_factory=dict)
    bound_from_theory: bool = False
    determining_pairs: Optional[list] = None

    def to_json(self) -> dict:
        return {
            "ern": self.value,
            "witness": [list(e) for e in self.witness] if self.witness else None,
            "bound_from_theory": self.bound_from_theory,
            "pairs_examined": len(self.blockers),
            "blockers": {
                f"{e1[0]}-{e1[1]},{e2[0]}-{e2[1]}": sorted(c.decode() for c in codes)
                for (e1, e2), codes in self.blockers.items()
            } if self.value == 3 else None,
            "determining_pairs": (
                [[list(e1), list(e2)] for e1, e2 in self.determining_pairs]
                if self.determining_pairs is not None else None
            ),
        }


def _extension_codes(card: Graph) -> tuple[set, int]:
    n = card.n
    adj = [list(a) for a in card.adj]
    members = set()
    raw = 0
    for u in range(n):
        au = adj[u]
        for v in range(u + 1, n):
            if v in au:
                continue
            au.append(v)
            adj[v].append(u)
            members.add(code_of_adj(n, adj))
            au.pop()
            adj[v].pop()
            raw += 1
    return members, raw


def extensions(card: Graph) -> ExtensionSet:
    """All one-edge extensions of ``card`` up to isomorphism."""
    if card.m == card.n * (card.n - 1) // 2:
        raise GraphError("complete graph has no extensions")
    members, raw = _extension_codes(card)
    return ExtensionSet(canonical_code(card), frozenset(members), raw)


class _LRU(OrderedDict):
    def __init__(self, size: int):
        super().__init__()
        self.size = size

    def get_or(self, key, make):
        try:
            self.move_to_end(key)
            return self[key]
        except KeyError:
            val = make(key)
            self[key] = val
            if len(self) > self.size:
                self.popitem(last=False)
            return val


class ErnSearch:
    """Pair-blocker search with caches shared across trees.

    Extension sets are keyed by card code, so trees sharing a card (common
    within one order) reuse the work.
    """

    def __init__(self, cache_size: int = 20000):
        self._ext = _LRU(cache_size)
        self._mult = _LRU(cache_size)

    def extension_members(self, card_code: bytes) -> frozenset:
        return self._ext.get_or(card_code, lambda c: frozenset(_extension_codes(decode(c))[0]))

    def _multiplicity(self, key) -> int:
        def count(k):
            x, card = k
            g = decode(x)
            return sum(1 for e in g.sorted_edges() if canonical_code(g.delete_edge(*e)) == card)

        return self._mult.get_or(key, count)

    def blockers_for_cards(self, tree_code: bytes, c1: bytes, c2: bytes) -> frozenset:
        s = self.extension_members(c1) & self.extension_members(c2)
        if c1 == c2:
            s = {x for x in s if self._multiplicity((x, c1)) >= 2}
        return frozenset(s - {tree_code})

    def pair_blockers(self, t: Graph, e1: Edge, e2: Edge) -> frozenset:
        if not is_tree(t):
            raise GraphError("not a tree")
        e1, e2 = norm_edge(*e1), norm_edge(*e2)
        if e1 == e2:
            raise GraphError("identical edges")
        c1 = canonical_code(t.delete_edge(*e1))
        c2 = canonical_code(t.delete_edge(*e2))
        return self.blockers_for_cards(canonical_code(t), c1, c2)

    def ern(self, t: Graph, exhaustive: bool = False) -> ErnResult:
        if not is_tree(t):
            raise GraphError("not a tree")
        if t.m < 4:
            raise TooSmallError("ern is defined here for trees with at least four edges")
        tc = canonical_code(t)
        edges = t.sorted_edges()
        cards = [canonical_code(t.delete_edge(*e)) for e in edges]
        done: dict = {}
        blockers: dict = {}
        witness = None
        determining = [] if exhaustive else None
        for i, j in combinations(range(len(edges)), 2):
            key = (cards[i], cards[j]) if cards[i] <= cards[j] else (cards[j], cards[i])
            s = done.get(key)
            if s is None:
                s = done[key] = self.blockers_for_cards(tc, *key)
            pair = (edges[i], edges[j])
            blockers[pair] = s
            if not s:
                if witness is None:
                    witness = pair
                if exhaustive:
                    determining.append(pair)
                else:
                    break
        if witness is not None:
            return ErnResult(2, witness, blockers, False, determining)
        return ErnResult(3, None, blockers, True, determining)


_default = ErnSearch()


def pair_blockers(t: Graph, e1: Edge, e2: Edge) -> frozenset:
    return _default.pair_blockers(t, e1, e2)


def blockers_for_cards(tree_code: bytes, c1: bytes, c2: bytes) -> frozenset:
    return _default.blockers_for_cards(tree_code, c1, c2)


def ern(t: Graph, exhaustive: bool = False) -> ErnResult:
    return _default.ern(t, exhaustive)


# -- independent oracle ----------------------------------------------------------

ORACLE_MAX_N = 9


@lru_cache(maxsize=None)
def all_graphs(n: int, m: int) -> tuple:
    """Codes (general canonicalizer) of every graph with ``n`` vertices and
    ``m`` edges, grown one edge at a time from the empty graph."""
    level = {canonical_code(Graph(n), method="general")}
    for _ in range(m):
        nxt = set()
        for code in level:
            g = decode(code)
            for u, v in g.non_edges():
                nxt.add(canonical_code(g.add_edge(u, v), method="general"))
        level = nxt
    return tuple(sorted(level))


@lru_cache(maxsize=None)
def _deck_index(n: int, m: int) -> dict:
    index: dict = {}
    for x in all_graphs(n, m):
        g = decode(x)
        counts: dict = {}
        for e in g.sorted_edges():
            c = canonical_code(g.delete_edge(*e), method="general")
            counts[c] = counts.get(c, 0) + 1
        for c, k in counts.items():
            index.setdefault(c, {})[x] = k
    return index


def ern_oracle(t: Graph) -> ErnResult:
    """Recompute ``ern`` by scanning the edge-deck of every graph of the same
    order and size.  Blocker sets are reported in the default code space."""
    if not is_tree(t):
        raise GraphError("not a tree")
    if t.m < 4:
        raise TooSmallError("ern is defined here for trees with at least four edges")
    if t.n > ORACLE_MAX_N:
        raise GraphError(f"oracle limited to n <= {ORACLE_MAX_N}")
    index = _deck_index(t.n, t.m)
    target = canonical_code(t, method="general")
    edges = t.sorted_edges()
    cards = [canonical_code(t.delete_edge(*e), method="general") for e in edges]
    blockers = {}
    witness = None
    for i, j in combinations(range(len(edges)), 2):
        h1, h2 = index.get(cards[i], {}), index.get(cards[j], {})
        if cards[i] == cards[j]:
            hits = {x for x, k in h1.items() if k >= 2}
        else:
            hits = set(h1) & set(h2)
        hits.discard(target)
        pair = (edges[i], edges[j])
        blockers[pair] = frozenset(canonical_code(decode(x)) for x in hits)
        if not hits and witness is None:
            witness = pair
    if witness is not None:
        return ErnResult(2, witness, blockers, False)
    return ErnResult(3, None, blockers, True)
