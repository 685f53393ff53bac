import pytest

from edgerecon.canon import canonical_code
from edgerecon.graph import GraphError, is_tree
from edgerecon.treegen import (
    FREE_TREE_COUNTS, count_trees, generate_trees, rooted_tree_graph, rooted_trees,
)
from oracles import all_labeled_trees, grow_by_leaves


def _codes(trees):
    return [canonical_code(t) for t in trees]


@pytest.mark.parametrize("n", range(1, 9))
def test_matches_prufer_enumeration(n):
    labeled = {canonical_code(t) for t in all_labeled_trees(n)}
    codes = _codes(generate_trees(n))
    assert len(codes) == len(set(codes))
    assert set(codes) == labeled


def test_matches_leaf_growth_up_to_twelve():
    level = list(generate_trees(1))
    for n in range(2, 13):
        level = grow_by_leaves(level, canonical_code)
        assert set(_codes(generate_trees(n))) == {canonical_code(t) for t in level}


def test_examples():
    assert count_trees(7) == 11
    assert count_trees(10) == 106
    assert [t.n for t in generate_trees(1)] == [1]


@pytest.mark.parametrize("n", range(1, 17))
def test_counts(n):
    assert count_trees(n) == FREE_TREE_COUNTS[n]


def test_all_generated_graphs_are_trees():
    for n in range(1, 11):
        assert all(is_tree(t) and t.n == n for t in generate_trees(n))


def test_stream_is_deterministic():
    assert list(generate_trees(11)) == list(generate_trees(11))


@pytest.mark.parametrize("w", [1, 2, 3, 8])
def test_chunks_partition_stream(w):
    full = list(generate_trees(10))
    for k in range(w):
        assert list(generate_trees(10, w, k)) == full[k::w]


def test_out_of_range():
    for bad in (0, 27):
        with pytest.raises(GraphError):
            list(generate_trees(bad))
    with pytest.raises(GraphError):
        list(generate_trees(5, 2, 2))


def test_rooted_tree_counts():
    # rooted trees on k vertices
    assert [len(rooted_trees(k)) for k in range(1, 9)] == [1, 1, 2, 4, 9, 20, 48, 115]
    assert rooted_tree_graph(4, 0).n == 4
