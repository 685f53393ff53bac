import random

import pytest

from edgerecon.canon import canonical_code, decode
from edgerecon.deck import card_multiplicity, edge_deck
from edgerecon.families import tk_graph
from edgerecon.graph import Graph, GraphError, components, cycle, path
from edgerecon.treegen import generate_trees


def test_path_deck():
    deck = edge_deck(path(4))
    assert len(deck.entries) == 2
    assert deck.multiplicity(canonical_code(path(3).union(path(1)))) == 2
    assert deck.multiplicity(canonical_code(path(2).union(path(2)))) == 1
    assert len(deck) == 3


@pytest.mark.parametrize("k", range(2, 6))
def test_tk_deck_has_two_cards(k):
    assert len(edge_deck(tk_graph(k)).entries) == 2


def test_triangle_deck():
    assert edge_deck(cycle(3)).entries == {canonical_code(path(3)): 3}


def test_no_edges():
    with pytest.raises(GraphError):
        edge_deck(Graph(4))


def test_card_multiplicity_examples():
    blocker = cycle(3).union(path(2))
    assert card_multiplicity(blocker, canonical_code(path(3).union(path(2)))) == 3
    assert card_multiplicity(path(4), canonical_code(path(2).union(path(2)))) == 1
    assert card_multiplicity(Graph(4, [(0, 1), (0, 2), (0, 3)]), canonical_code(path(2).union(path(2)))) == 0
    with pytest.raises(GraphError):
        card_multiplicity(path(4), canonical_code(path(4)))


def test_deck_invariants_on_small_trees():
    rng = random.Random(3)
    for n in range(2, 9):
        for t in generate_trees(n):
            deck = edge_deck(t)
            assert len(deck) == t.m
            perm = list(range(n))
            rng.shuffle(perm)
            assert edge_deck(t.relabel(perm)) == deck
            for code, k in deck.entries.items():
                card = decode(code)
                assert card.n == n and card.m == t.m - 1
                orders = components(card).sorted_orders()
                assert len(orders) == 2 and sum(orders) == n
                assert card_multiplicity(t, code) == k
