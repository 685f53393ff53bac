"""Command line entry point: ``edgerecon {gen,ern,census,report,verify}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .canon import canonical_code
from .census import report, run_census
from .ern import ern
from .families import InvalidSpecError, build, parse_spec
from .graph import GraphError, from_graph6, to_graph6
from .treegen import generate_trees
from .verify import SUITES, run_suite


def _graph_from(text: str):
    try:
        return build(parse_spec(text))
    except InvalidSpecError:
        if ":" in text or "(" in text:
            raise
    return from_graph6(text.encode())


def cmd_gen(args) -> int:
    out = sys.stdout
    for t in generate_trees(args.n, args.workers, args.worker):
        out.write(to_graph6(t).decode() + "\n")
    return 0


def cmd_ern(args) -> int:
    g = _graph_from(args.spec)
    res = ern(g, exhaustive=args.exhaustive)
    doc = {"input": args.spec, "g6": canonical_code(g).decode(), "n": g.n, "m": g.m}
    doc.update(res.to_json())
    if not args.blockers:
        doc.pop("blockers")
    print(json.dumps(doc, indent=2))
    return 0


def cmd_census(args) -> int:
    summary = run_census(args.n_from, args.n_to, args.workers, args.out,
                         extended=args.extended, processes=args.processes)
    print(json.dumps(summary, indent=2))
    return 0


def cmd_report(args) -> int:
    diff = report(args.out, args.against)
    print(json.dumps(diff, indent=2))
    if args.against == "catalog":
        return 0 if diff["empty_diff"] else 1
    return 0


def cmd_verify(args) -> int:
    rep = run_suite(args.suite, args.max_n)
    print(json.dumps(rep.to_json(), indent=2))
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgerecon", description="Edge-reconstruction numbers of trees")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="print all trees of order n as graph6")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--workers", type=int, default=1, help="chunk count (with --worker)")
    g.add_argument("--worker", type=int, default=0)
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("ern", help="ern of one tree given as a family spec or graph6")
    e.add_argument("--spec", required=True, help="e.g. path:9, cat:2,0^3,2, tk:3 or a graph6 string")
    e.add_argument("--exhaustive", action="store_true", help="examine every edge pair")
    e.add_argument("--blockers", action="store_true", help="include blocker codes for ern = 3")
    e.set_defaults(func=cmd_ern)

    c = sub.add_parser("census", help="ern of every tree in an order range, sharded and resumable")
    c.add_argument("--from", dest="n_from", type=int, required=True)
    c.add_argument("--to", dest="n_to", type=int, required=True)
    c.add_argument("--workers", type=int, default=1, help="number of shards per order")
    c.add_argument("--processes", type=int, default=None,
                   help="process pool size (default: min(workers, cpu count))")
    c.add_argument("--out", required=True)
    c.add_argument("--extended", action="store_true", help="allow orders 14 and 15")
    c.set_defaults(func=cmd_census)

    r = sub.add_parser("report", help="compare a finished census with known results")
    r.add_argument("--out", required=True)
    r.add_argument("--against", choices=("catalog", "conjecture"), default="catalog")
    r.set_defaults(func=cmd_report)

    v = sub.add_parser("verify", help="run a structural verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    v.add_argument("--max-n", type=int, default=None)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
