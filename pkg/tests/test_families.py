import pytest

from edgerecon.canon import are_isomorphic, canonical_code, edge_orbits
from edgerecon.ern import pair_blockers
from edgerecon.families import (
    CATALOG_RANGE, BicentroidalJoin, Caterpillar, Cycle, InvalidSpecError, Path,
    RootedAttach, Spider, Tk, Union, UnsupportedCaseError, blocker_cases, blocker_for, build,
    caterpillar_graph, conjectured_family_members, even_diameter_caterpillar, format_spec,
    known_ern3_catalog, known_ern3_named, parse_spec, tk_graph,
)
from edgerecon.graph import cycle, path
from edgerecon.trees import centroid, diameter, spider


def test_vertex_counts():
    assert build(Spider(1, 2, 3)).n == 7
    assert build(Caterpillar((2, 0, 3))).n == 8
    for k in range(2, 7):
        assert build(Tk(k)).n == 3 * k + 1
    assert build(Union(Cycle(3), Path(2))).n == 5


def test_named_identities():
    assert are_isomorphic(build(Tk(2)), caterpillar_graph((2, 0, 2)))
    assert classify_s2(build(Spider(1, 2, 3)))
    g2 = build(BicentroidalJoin(2, 2, 2, 2))
    info = centroid(g2)
    assert g2.n == 10 and info.bicentroidal


def classify_s2(g):
    from edgerecon.trees import classify_pseudopath
    return classify_pseudopath(g).kind == "S2"


@pytest.mark.parametrize("k", range(2, 6))
def test_tk_has_two_edge_orbits(k):
    assert len(edge_orbits(tk_graph(k))) == 2


@pytest.mark.parametrize("spec", [Path(0), Spider(0, 1, 1), Caterpillar(()), Tk(1), Cycle(2),
                                  Caterpillar((1, -1))])
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpecError):
        build(spec)


def test_rooted_attach():
    g = build(RootedAttach(Path(3), 1, Path(2), 0))
    assert are_isomorphic(g, spider(1, 1, 1))
    with pytest.raises(InvalidSpecError):
        build(RootedAttach(Path(3), 5, Path(2), 0))


@pytest.mark.parametrize("text,spec", [
    ("path:9", Path(9)),
    ("spider:2,2,2", Spider(2, 2, 2)),
    ("cat:2,0,0,0,2", Caterpillar((2, 0, 0, 0, 2))),
    ("cat:2,0^3,2", Caterpillar((2, 0, 0, 0, 2))),
    ("tk:4", Tk(4)),
    ("bij:2,2,2,2", BicentroidalJoin(2, 2, 2, 2)),
    ("cycle:5", Cycle(5)),
    ("union(cycle:3,path:2)", Union(Cycle(3), Path(2))),
    ("union(cat:2,0,2,union(path:1,path:2))", Union(Caterpillar((2, 0, 2)), Union(Path(1), Path(2)))),
])
def test_parse_spec(text, spec):
    assert parse_spec(text) == spec
    assert parse_spec(format_spec(spec)) == spec


@pytest.mark.parametrize("text", ["path", "path:x", "blob:3", "tk:1", "spider:1,2", "union(path:3)"])
def test_parse_spec_errors(text):
    with pytest.raises(InvalidSpecError):
        parse_spec(text)


def test_catalog_contents():
    assert [name for name, _ in known_ern3_named(6)] == ["C(2,2)"]
    assert sorted(name for name, _ in known_ern3_named(7)) == ["C(2,0,2)", "P7", "S222"]
    everything = [g for n in range(4, 12) for g in known_ern3_catalog(n)]
    assert len(everything) == 17
    assert len({canonical_code(g) for g in everything}) == 17
    with pytest.raises(Exception):
        known_ern3_catalog(12)
    assert CATALOG_RANGE == (4, 11)


def test_caterpillar_diameter():
    for s in range(3, 10):
        c = build(Caterpillar((2,) + (0,) * (s - 2) + (2,)))
        assert diameter(c) == s + 1
    assert build(even_diameter_caterpillar(6)).n == 9


def test_conjectured_members_orders():
    assert set(conjectured_family_members(13)) == {"odd-path", "even-diam-cat", "tk"}
    assert conjectured_family_members(12) == {}
    assert set(conjectured_family_members(15)) == {"odd-path", "even-diam-cat"}


def test_path_blocker_examples():
    c = blocker_for(Path(5), (2, 3))
    assert are_isomorphic(c.blocker, cycle(3).union(path(2)))
    c = blocker_for(Path(9), (1, 2))
    assert are_isomorphic(c.blocker, spider(1, 2, 5))
    c = blocker_for(Path(9), (4, 5))
    assert are_isomorphic(c.blocker, cycle(4).union(path(5)))


def test_tk_blocker():
    c = blocker_for(Tk(3), ("center", "center"))
    assert are_isomorphic(c.blocker, tk_graph(2).union(cycle(3)))
    with pytest.raises(UnsupportedCaseError):
        blocker_for(Tk(3), ("center", "leaf"))


def test_caterpillar_d4_last_case_not_a_forest():
    from edgerecon.graph import is_forest
    cases = {tuple(p): blocker_for(Caterpillar((2, 0, 2)), p) for p in blocker_cases(Caterpillar((2, 0, 2)))}
    assert set(cases) == {(1, 1), (1, 2), (2, 2)}
    assert is_forest(cases[1, 1].blocker) and is_forest(cases[1, 2].blocker)
    assert not is_forest(cases[2, 2].blocker)


def test_unsupported_families():
    with pytest.raises(UnsupportedCaseError):
        blocker_for(Path(6), (1, 2))
    with pytest.raises(UnsupportedCaseError):
        blocker_for(Spider(2, 2, 2), (1, 2))


@pytest.mark.parametrize("family", [Path(5), Path(7), Path(9), Caterpillar((2, 0, 2)),
                                    Caterpillar((2, 0, 0, 0, 2)), Tk(2), Tk(3)])
def test_certificates_appear_in_search_output(family):
    target = build(family)
    for case in blocker_cases(family):
        cert = blocker_for(family, case)
        assert cert.valid
        # recover the target edges from the cards and check the search finds the blocker
        edges = {canonical_code(target.delete_edge(*e)): e for e in target.sorted_edges()}
        e1, e2 = edges[cert.cards[0]], None
        for e in target.sorted_edges():
            if e != e1 and canonical_code(target.delete_edge(*e)) == cert.cards[1]:
                e2 = e
                break
        assert canonical_code(cert.blocker) in pair_blockers(target, e1, e2)
