"""Command-line front end.

    oddpair <command> [--n-max K] [--cap K] [--allow-vacuous] [--seed S] [--json PATH]

Graphs are read from standard input as graph6 lines wherever a corpus is
needed and --n-max is not given. Reports go to standard output as
tab-delimited records; ``--json PATH`` also writes the JSON report (``-``
sends JSON to standard output instead of the table), and ``--figures DIR``
renders PNG charts of the report.

Exit status: 0 scan completed, 1 an asserted suite failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import generators as gen
from .berge import is_berge
from .graph import GraphError, encode_graph6, read_graph6_lines
from .invariants import CapExceeded, chromatic_number, clique_number, independence_number, is_perfect
from .linegraph import line_graph
from .paths import PATH_CAP, find_even_pair
from .report import ScanReport, load_report, revalidate
from .scans import cmd_conjecture_mini, cmd_conjecture_struct
from .suites import SUITES, SuiteConfig, cmd_verify


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n-max", type=int, default=None, help="largest order in the generated corpus")
    p.add_argument("--cap", type=int, default=PATH_CAP, help="per-graph vertex cap for exhaustive searches")
    p.add_argument("--allow-vacuous", action="store_true",
                   help="count pairs joined by no path as even pairs or odd clique pairs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' for standard output)")
    p.add_argument("--figures", metavar="DIR", help="render report figures into DIR")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="oddpair", description="Exact parity checks on vertex and clique pairs in small graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a named verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    sub.add_parser("suites", help="list verification suites")
    sub.add_parser("conjecture-struct", parents=[common],
                   help="scan Berge graphs for the even-pair / odd-pair-of-maximal-cliques property")
    m = sub.add_parser("conjecture-mini", parents=[common],
                       help="check odd holes and antiholes for odd pairs of maximal cliques")
    m.add_argument("--k-max", type=int, default=4, help="largest k, covering cycles up to 2k+1")
    sub.add_parser("analyze", parents=[common], help="invariants of graph6 graphs on standard input")
    r = sub.add_parser("revalidate", help="re-check the counterexamples of a JSON report")
    r.add_argument("report")

    g = sub.add_parser("gen", help="emit generated graphs as graph6")
    gsub = g.add_subparsers(dest="family", required=True)
    for name in ("hole", "antihole", "path", "complete"):
        x = gsub.add_parser(name)
        x.add_argument("k", type=int)
    x = gsub.add_parser("prism")
    x.add_argument("lengths", type=int, nargs=3)
    x = gsub.add_parser("double-split")
    x.add_argument("m", type=int)
    x.add_argument("n", type=int)
    x.add_argument("--bits", type=int, default=None,
                   help="orientation matrix, row-major with bit 0 at (0,0); all 2^(mn) when omitted")
    x = gsub.add_parser("random-bipartite")
    x.add_argument("a", type=int)
    x.add_argument("b", type=int)
    x.add_argument("p", type=float)
    x.add_argument("--seed", type=int, default=0)
    x = gsub.add_parser("enumerate")
    x.add_argument("n", type=int)
    x.add_argument("--unique", action="store_true", help="one graph per isomorphism class")
    gsub.add_parser("line-graph", help="line graphs of the graph6 graphs on standard input")
    return parser


def _read_stdin_graphs() -> list:
    return list(read_graph6_lines(sys.stdin))


def _emit(report: ScanReport, args) -> None:
    if args.json == "-":
        print(report.dumps())
    else:
        print("\n".join(report.tsv_lines()))
        if args.json:
            Path(args.json).write_text(report.dumps() + "\n")
    if args.figures:
        from .plotting import render_report

        for path in render_report(report, args.figures):
            print(f"figure: {path}", file=sys.stderr)


def _cmd_gen(args) -> int:
    fam = args.family
    if fam in ("hole", "antihole", "path", "complete"):
        fn = {"hole": gen.gen_hole, "antihole": gen.gen_antihole, "path": gen.gen_path, "complete": gen.gen_complete}[fam]
        graphs = [fn(args.k)]
    elif fam == "prism":
        graphs = [gen.gen_prism(*args.lengths)]
    elif fam == "double-split":
        if args.bits is None:
            specs = list(gen.all_double_split_specs(args.m, args.n))
        else:
            specs = [gen.DoubleSplitSpec.from_bits(args.m, args.n, args.bits)]
        graphs = [gen.gen_double_split(s)[0] for s in specs]
    elif fam == "random-bipartite":
        graphs = [gen.gen_random_bipartite(args.a, args.b, args.p, args.seed)[0]]
    elif fam == "enumerate":
        graphs = gen.enumerate_graphs(args.n, unique=args.unique)
    else:
        graphs = (line_graph(g)[0] for g in _read_stdin_graphs())
    for g in graphs:
        print(encode_graph6(g))
    return 0


def _cmd_analyze(args) -> int:
    print("# graph6\tn\tm\tomega\talpha\tchi\tberge\tperfect\teven_pair")
    for g in _read_stdin_graphs():
        try:
            perfect = is_perfect(g).perfect
        except CapExceeded:
            perfect = "skipped"
        pair = find_even_pair(g, args.cap, args.allow_vacuous) if g.n <= args.cap else None
        print(f"{encode_graph6(g)}\t{g.n}\t{g.edge_count()}\t{clique_number(g)}\t{independence_number(g)}\t"
              f"{chromatic_number(g)[0]}\t{is_berge(g)}\t{perfect}\t{list(pair) if pair else '-'}")
    return 0


def _cmd_revalidate(args) -> int:
    data = load_report(Path(args.report).read_text())
    bad = 0
    for i, record in enumerate(data["counterexamples"]):
        problems = revalidate(record)
        print(f"{i}\t{record.get('kind')}\t{'ok' if not problems else 'INVALID'}\t{'; '.join(problems)}")
        bad += bool(problems)
    print(f"# {len(data['counterexamples'])} counterexamples, {bad} failed re-validation")
    return 1 if bad else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        if args.command == "suites":
            for name, (_, text) in SUITES.items():
                print(f"{name}\t{text}")
            return 0
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "revalidate":
            return _cmd_revalidate(args)
        if args.command == "verify":
            cfg = SuiteConfig(args.n_max, args.cap, args.allow_vacuous, args.seed, args.jobs)
            report = cmd_verify(args.suite, cfg)
            _emit(report, args)
            return 0 if report.passed else 1
        if args.command == "conjecture-struct":
            if args.n_max is not None:
                graphs = gen.corpus(args.n_max, 2)
                params = {"n_max": args.n_max}
            else:
                graphs = _read_stdin_graphs()
                params = {"source": "stdin"}
            report = cmd_conjecture_struct(graphs, args.cap, args.allow_vacuous, args.jobs, params)
            _emit(report, args)
            return 0
        if args.command == "conjecture-mini":
            k_max = args.k_max if args.n_max is None else (args.n_max - 1) // 2
            report = cmd_conjecture_mini(k_max, args.cap)
            _emit(report, args)
            return 0 if report.passed else 1
    except (GraphError, json.JSONDecodeError, ValueError) as exc:
        print(f"oddpair: error: {exc}", file=sys.stderr)
        return 2
    parser.error(f"unknown command {args.command}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
