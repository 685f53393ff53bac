"""Census of ern over all free trees of a range of orders.

Output layout in ``out_dir``::

    census.json                 run manifest (order range, worker count)
    n11_w0of2.jsonl             one shard per (order, worker)
    sporadics.g6                ern = 3 trees outside every known family

A shard is a JSON header line, one record per tree (sorted by code) and a
footer holding the record count and a sha256 of the record lines.  Shards
with a valid footer are skipped on re-run, so an interrupted census resumes
where it stopped.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass, field
from multiprocessing import get_context
from pathlib import Path
from typing import Iterable, Optional

from . import __version__
from .canon import canonical_code, decode
from .ern import ErnSearch
from .families import CATALOG_RANGE, conjectured_family_members, known_ern3_catalog
from .graph import GraphError
from .trees import centroid
from .treegen import generate_trees

log = logging.getLogger(__name__)

MIN_ORDER = 5  # trees need at least four edges
CORE_MAX = 13
EXTENDED_MAX = 15
TAGS = ("odd-path", "even-diam-cat", "tk", "known-sporadic", "unclassified")


class CorruptShardError(GraphError):
    pass


class IncompleteShardsError(GraphError):
    pass


@dataclass
class CensusRecord:
    g6: str
    n: int
    ern: int
    witness: Optional[list]
    centroid: str
    tags: list = field(default_factory=list)
    blockers: Optional[dict] = None

    def to_line(self) -> str:
        d = {"g6": self.g6, "n": self.n, "ern": self.ern, "witness": self.witness,
             "centroid": self.centroid, "tags": self.tags}
        if self.blockers is not None:
            d["blockers"] = self.blockers
        return json.dumps(d, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRecord":
        return cls(d["g6"], d["n"], d["ern"], d.get("witness"), d.get("centroid", ""),
                   list(d.get("tags", [])), d.get("blockers"))


# -- classification ------------------------------------------------------------


def _family_codes(n: int) -> dict[str, bytes]:
    return {tag: canonical_code(g) for tag, g in conjectured_family_members(n).items()}


def _catalog_codes(n: int) -> set[bytes]:
    lo, hi = CATALOG_RANGE
    if lo <= n <= hi:
        return {canonical_code(g) for g in known_ern3_catalog(n)}
    return set()


def classify(record: CensusRecord, sporadics: Iterable[bytes] = ()) -> list[str]:
    """Family tags of an ern = 3 record (ern = 2 records get none)."""
    if record.ern != 3:
        return []
    code = record.g6.encode()
    tags = [tag for tag, c in _family_codes(record.n).items() if c == code]
    if not tags and (code in _catalog_codes(record.n) or code in set(sporadics)):
        tags = ["known-sporadic"]
    return tags or ["unclassified"]


# -- shards --------------------------------------------------------------------


def shard_name(n: int, worker: int, workers: int) -> str:
    return f"n{n:02d}_w{worker}of{workers}.jsonl"


def _digest(lines: list[str]) -> str:
    h = hashlib.sha256()
    for ln in lines:
        h.update(ln.encode())
        h.update(b"\n")
    return h.hexdigest()


def compute_shard(n: int, workers: int, worker: int) -> list[CensusRecord]:
    search = ErnSearch()
    records = []
    for t in generate_trees(n, workers, worker):
        code = canonical_code(t)
        canon = decode(code)  # witness edges refer to the stored graph6 labels
        res = search.ern(canon)
        rec = CensusRecord(
            g6=code.decode(), n=n, ern=res.value,
            witness=[list(e) for e in res.witness] if res.witness else None,
            centroid="bi" if centroid(canon).bicentroidal else "uni",
        )
        if res.value == 3:
            sizes = [len(s) for s in res.blockers.values()]
            rec.blockers = {"pairs": len(sizes), "min": min(sizes), "max": max(sizes)}
        rec.tags = classify(rec)
        records.append(rec)
    records.sort(key=lambda r: r.g6)
    return records


def write_shard(path: Path, n: int, workers: int, worker: int, records: list[CensusRecord]) -> None:
    body = [r.to_line() for r in records]
    header = json.dumps({"type": "header", "n": n, "worker": worker, "workers": workers,
                         "chunk": f"index % {workers} == {worker}",
                         "version": __version__}, sort_keys=True)
    footer = json.dumps({"type": "footer", "count": len(body), "sha256": _digest(body)},
                        sort_keys=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("\n".join([header] + body + [footer]) + "\n")
    os.replace(tmp, path)


def read_shard(path: Path) -> list[CensusRecord]:
    try:
        lines = path.read_text().splitlines()
        header, footer = json.loads(lines[0]), json.loads(lines[-1])
    except (OSError, IndexError, ValueError) as exc:
        raise CorruptShardError(f"{path}: unreadable ({exc})") from None
    if header.get("type") != "header" or footer.get("type") != "footer":
        raise CorruptShardError(f"{path}: missing header or footer")
    body = lines[1:-1]
    if footer.get("count") != len(body) or footer.get("sha256") != _digest(body):
        raise CorruptShardError(f"{path}: checksum mismatch")
    return [CensusRecord.from_dict(json.loads(ln)) for ln in body]


def _shard_job(args):
    n, workers, worker, out_dir = args
    path = Path(out_dir) / shard_name(n, workers=workers, worker=worker)
    if path.exists():
        try:
            read_shard(path)
            return n, worker, "skipped"
        except CorruptShardError as exc:
            log.warning("recomputing %s", exc)
    write_shard(path, n, workers, worker, compute_shard(n, workers, worker))
    return n, worker, "computed"


# -- driver ----------------------------------------------------------------------


def load_sporadics(out_dir) -> list[bytes]:
    p = Path(out_dir) / "sporadics.g6"
    if not p.exists():
        return []
    return [ln.strip().encode() for ln in p.read_text().splitlines()
            if ln.strip() and not ln.startswith("#")]


def _append_sporadics(out_dir, codes: list[bytes]) -> None:
    p = Path(out_dir) / "sporadics.g6"
    known = load_sporadics(out_dir)
    new = [c for c in sorted(set(codes)) if c not in known]
    if not new and p.exists():
        return
    lines = ["# edgerecon sporadic ern=3 trees, format v1"] + [c.decode() for c in known + new]
    p.write_text("\n".join(lines) + "\n")


def run_census(n_min: int, n_max: int, workers: int = 1, out_dir=".",
               extended: bool = False, processes: Optional[int] = None) -> dict:
    cap = EXTENDED_MAX if extended else CORE_MAX
    if not (4 <= n_min <= n_max <= cap):
        raise GraphError(f"order range must satisfy 4 <= from <= to <= {cap}"
                         + ("" if extended else " (use extended mode beyond 13)"))
    if workers < 1:
        raise GraphError("need at least one worker")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {"from": n_min, "to": n_max, "workers": workers, "version": __version__}
    (out / "census.json").write_text(json.dumps(manifest, sort_keys=True) + "\n")
    orders = [n for n in range(n_min, n_max + 1) if n >= MIN_ORDER]
    jobs = [(n, workers, w, str(out)) for n in orders for w in range(workers)]
    procs = processes if processes is not None else min(workers, os.cpu_count() or 1)
    if procs > 1 and len(jobs) > 1:
        with get_context("spawn").Pool(procs) as pool:
            status = pool.map(_shard_job, jobs, chunksize=1)
    else:
        status = [_shard_job(j) for j in jobs]
    summary = summarize(out, orders, workers)
    summary["skipped_orders"] = [n for n in range(n_min, n_max + 1) if n < MIN_ORDER]
    summary["shards"] = {"computed": sum(s == "computed" for *_, s in status),
                         "skipped": sum(s == "skipped" for *_, s in status)}
    unclassified = [r.g6.encode() for n in orders for r in load_records(out, n, workers)
                    if "unclassified" in r.tags]
    if unclassified:
        _append_sporadics(out, unclassified)
    return summary


def load_records(out_dir, n: int, workers: int) -> list[CensusRecord]:
    recs = []
    for w in range(workers):
        p = Path(out_dir) / shard_name(n, w, workers)
        if not p.exists():
            raise IncompleteShardsError(f"missing shard {p}")
        recs += read_shard(p)
    return sorted(recs, key=lambda r: r.g6)


def summarize(out_dir, orders, workers: int) -> dict:
    per = {}
    for n in orders:
        recs = load_records(out_dir, n, workers)
        per[n] = {"trees": len(recs), "ern2": sum(r.ern == 2 for r in recs),
                  "ern3": sum(r.ern == 3 for r in recs)}
    return {"orders": per, "ern3_total": sum(v["ern3"] for v in per.values())}


def _manifest(out_dir) -> dict:
    p = Path(out_dir) / "census.json"
    if not p.exists():
        raise IncompleteShardsError(f"no census manifest in {out_dir}")
    return json.loads(p.read_text())


def report(out_dir, against: str = "catalog") -> dict:
    """Compare the stored ern = 3 trees with the known catalogue (orders up to
    11) or with the conjectured families (orders 12 and up)."""
    man = _manifest(out_dir)
    workers = man["workers"]
    orders = [n for n in range(man["from"], man["to"] + 1) if n >= MIN_ORDER]
    sporadics = set(load_sporadics(out_dir))
    lo, hi = CATALOG_RANGE
    out: dict = {"against": against, "orders": {}}
    if against == "catalog":
        missing, extra = [], []
        for n in orders:
            if n > hi:
                continue
            found = {r.g6 for r in load_records(out_dir, n, workers) if r.ern == 3}
            expect = {canonical_code(g).decode() for g in known_ern3_catalog(n)}
            out["orders"][n] = {"found": len(found), "expected": len(expect)}
            missing += sorted(expect - found)
            extra += sorted(found - expect)
        out["missing"], out["extra"] = missing, extra
        out["empty_diff"] = not missing and not extra
        return out
    if against != "conjecture":
        raise ValueError(f"unknown report target {against!r}")
    unclassified = []
    family_misses = []
    for n in orders:
        if n <= hi:
            continue
        recs = load_records(out_dir, n, workers)
        fam = {c.decode(): tag for tag, c in _family_codes(n).items()}
        threes = [r for r in recs if r.ern == 3]
        un = [r.g6 for r in threes if r.g6 not in fam]
        by_code = {r.g6: r for r in recs}
        misses = [tag for code, tag in fam.items() if by_code.get(code) and by_code[code].ern != 3]
        out["orders"][n] = {"ern3": len(threes),
                            "family": sorted(fam[r.g6] for r in threes if r.g6 in fam),
                            "unclassified": un}
        unclassified += [{"n": n, "g6": c, "in_sporadics_file": c.encode() in sporadics}
                         for c in un]
        family_misses += [{"n": n, "family": t} for t in misses]
    out["unclassified"] = unclassified
    out["family_members_with_ern2"] = family_misses
    return out
