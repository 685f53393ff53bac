"""Edge-decks as multisets of canonical codes."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .canon import canonical_code, decode
from .graph import Graph, GraphError


@dataclass(frozen=True)
class EdgeDeck:
    entries: dict[bytes, int]
    source_n: int
    source_m: int

    def __contains__(self, code: bytes) -> bool:
        return code in self.entries

    def multiplicity(self, code: bytes) -> int:
        return self.entries.get(code, 0)

    def __len__(self) -> int:
        return sum(self.entries.values())


def edge_cards(g: Graph, method: str = "auto") -> list[tuple[tuple[int, int], bytes]]:
    """``(edge, code of g - edge)`` for every edge, in sorted edge order."""
    return [(e, canonical_code(g.delete_edge(*e), method=method)) for e in g.sorted_edges()]


def edge_deck(g: Graph, method: str = "auto") -> EdgeDeck:
    if g.m == 0:
        raise GraphError("graph has no edges")
    counts = Counter(code for _, code in edge_cards(g, method))
    return EdgeDeck(dict(counts), g.n, g.m)


def card_multiplicity(g: Graph, card: bytes, method: str = "auto") -> int:
    c = decode(card)
    if c.n != g.n or c.m != g.m - 1:
        raise GraphError(f"card shape (n={c.n}, m={c.m}) does not fit graph (n={g.n}, m={g.m})")
    return sum(1 for _, code in edge_cards(g, method) if code == card)
