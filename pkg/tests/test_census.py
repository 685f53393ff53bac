import json

import pytest

from edgerecon.canon import canonical_code, decode
from edgerecon.census import (
    CensusRecord, CorruptShardError, IncompleteShardsError, classify, load_records,
    load_sporadics, read_shard, report, run_census, shard_name,
)
from edgerecon.ern import pair_blockers
from edgerecon.families import Caterpillar, build, tk_graph
from edgerecon.graph import GraphError, path


def _record(g, ern=3):
    return CensusRecord(canonical_code(g).decode(), g.n, ern, None, "uni")


def test_classify_conjectured_families():
    assert classify(_record(path(13))) == ["odd-path"]
    assert classify(_record(build(Caterpillar((2,) + (0,) * 7 + (2,))))) == ["even-diam-cat"]
    assert classify(_record(tk_graph(4))) == ["tk"]
    assert classify(_record(path(12), ern=2)) == []


def test_classify_catalog_and_sporadics():
    from edgerecon.trees import spider
    assert classify(_record(spider(2, 2, 2))) == ["known-sporadic"]
    odd = _record(spider(3, 3, 6))
    assert classify(odd) == ["unclassified"]
    assert classify(odd, sporadics=[odd.g6.encode()]) == ["known-sporadic"]
    # T_2 is both a T_k and an even-diameter caterpillar
    assert sorted(classify(_record(tk_graph(2)))) == ["even-diam-cat", "tk"]


def test_small_census(tmp_path):
    summary = run_census(4, 9, workers=2, out_dir=tmp_path, processes=1)
    assert summary["skipped_orders"] == [4]
    assert {n: v["ern3"] for n, v in summary["orders"].items()} == {5: 1, 6: 1, 7: 3, 8: 2, 9: 2}
    assert summary["shards"] == {"computed": 10, "skipped": 0}
    again = run_census(4, 9, workers=2, out_dir=tmp_path, processes=1)
    assert again["shards"] == {"computed": 0, "skipped": 10}
    diff = report(tmp_path, "catalog")
    assert diff["empty_diff"]


def test_shard_layout(tmp_path):
    run_census(7, 7, workers=2, out_dir=tmp_path, processes=1)
    lines = (tmp_path / shard_name(7, 0, 2)).read_text().splitlines()
    header, footer = json.loads(lines[0]), json.loads(lines[-1])
    assert header["chunk"] == "index % 2 == 0" and header["n"] == 7
    assert footer["count"] == len(lines) - 2
    codes = [json.loads(x)["g6"] for x in lines[1:-1]]
    assert codes == sorted(codes)


def test_witnesses_replay(tmp_path):
    run_census(8, 10, workers=1, out_dir=tmp_path, processes=1)
    for n in (8, 9, 10):
        for rec in load_records(tmp_path, n, 1):
            t = decode(rec.g6.encode())
            if rec.ern == 2:
                assert not pair_blockers(t, *map(tuple, rec.witness))
            else:
                assert rec.witness is None and rec.blockers["min"] >= 1


def test_worker_count_does_not_change_records(tmp_path):
    run_census(5, 10, workers=1, out_dir=tmp_path / "a", processes=1)
    run_census(5, 10, workers=3, out_dir=tmp_path / "b", processes=1)
    for n in range(5, 11):
        a = [r.to_line() for r in load_records(tmp_path / "a", n, 1)]
        b = [r.to_line() for r in load_records(tmp_path / "b", n, 3)]
        assert a == b


def test_corrupt_shard_is_recomputed(tmp_path):
    run_census(8, 8, workers=2, out_dir=tmp_path, processes=1)
    p = tmp_path / shard_name(8, 1, 2)
    good = p.read_bytes()
    p.write_bytes(good[: len(good) // 2])
    with pytest.raises(CorruptShardError):
        read_shard(p)
    with pytest.raises(CorruptShardError):
        report(tmp_path, "catalog")
    summary = run_census(8, 8, workers=2, out_dir=tmp_path, processes=1)
    assert summary["shards"] == {"computed": 1, "skipped": 1}
    assert p.read_bytes() == good


def test_tampered_record_fails_checksum(tmp_path):
    run_census(6, 6, workers=1, out_dir=tmp_path, processes=1)
    p = tmp_path / shard_name(6, 0, 1)
    p.write_text(p.read_text().replace('"ern":3', '"ern":2'))
    with pytest.raises(CorruptShardError):
        read_shard(p)


def test_missing_shards(tmp_path):
    with pytest.raises(IncompleteShardsError):
        report(tmp_path, "catalog")
    run_census(6, 7, workers=2, out_dir=tmp_path, processes=1)
    (tmp_path / shard_name(7, 1, 2)).unlink()
    with pytest.raises(IncompleteShardsError):
        report(tmp_path, "catalog")


def test_order_cap(tmp_path):
    with pytest.raises(GraphError):
        run_census(12, 14, out_dir=tmp_path)
    with pytest.raises(GraphError):
        run_census(12, 16, out_dir=tmp_path, extended=True)
    with pytest.raises(GraphError):
        run_census(3, 5, out_dir=tmp_path)


def test_conjecture_report_at_twelve(tmp_path):
    run_census(12, 12, workers=1, out_dir=tmp_path, processes=1)
    diff = report(tmp_path, "conjecture")
    assert diff["orders"][12] == {"ern3": 0, "family": [], "unclassified": []}
    assert diff["unclassified"] == [] and diff["family_members_with_ern2"] == []
    assert load_sporadics(tmp_path) == []


def test_process_pool_path(tmp_path):
    run_census(6, 8, workers=2, out_dir=tmp_path / "pool", processes=2)
    run_census(6, 8, workers=2, out_dir=tmp_path / "seq", processes=1)
    for n in (6, 7, 8):
        for w in range(2):
            name = shard_name(n, w, 2)
            assert (tmp_path / "pool" / name).read_bytes() == (tmp_path / "seq" / name).read_bytes()
