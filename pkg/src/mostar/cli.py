"""Command-line interface.

Deterministic, flag-driven, no ambient configuration: identical inputs give
byte-identical output regardless of worker count.  Data goes to stdout (or
--out); diagnostics go to stderr.  Exit codes: 0 success, 1 generic failure,
2 malformed input, 3 not realizable, 4 open/unknown realizability,
5 out of range.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import IO

from .errors import (
    BadParams,
    EmptyStream,
    MalformedRecord,
    MixedOrder,
    MostarError,
    NotRealizable,
    OutOfRange,
    SelfLoop,
    UnknownRealizability,
    UnknownSuite,
)
from .generate import generate_connected
from .graph import Graph, format_edge_list, parse_edge_list
from .graph6 import HEADER, decode_graph6, encode_graph6, read_graph6_lines
from .invariants import (
    edge_report,
    mostar_index,
    structural_profile,
    transmissions,
    wiener_index,
)
from .stats import mo_histogram, order_histogram, realizer_table, stats_from_histogram
from .verify import DEFAULT_N_MAX, SUITES, verify_suite
from .witness import chemical_witness, layered_even, three_layer, tree_witness, witness

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_MALFORMED = 2
EXIT_NOT_REALIZABLE = 3
EXIT_UNKNOWN = 4
EXIT_OUT_OF_RANGE = 5

_FORMATS = ("tsv", "csv", "jsonl", "json-lines")


class _Writer:
    """Emit header + rows as tsv/csv/jsonl."""

    def __init__(self, out: IO[str], fmt: str):
        self.out = out
        self.fmt = "jsonl" if fmt == "json-lines" else fmt

    def header(self, columns: list[str]) -> None:
        if self.fmt == "tsv":
            self.out.write("#" + "\t".join(columns) + "\n")
        elif self.fmt == "csv":
            self.out.write(",".join(columns) + "\n")

    def row(self, values: list, obj: dict | None = None) -> None:
        if self.fmt == "jsonl":
            self.out.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            sep = "\t" if self.fmt == "tsv" else ","
            self.out.write(sep.join(str(v) for v in values) + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graphs(text: str) -> list[Graph]:
    """Auto-detect edge-list vs graph6 input."""
    for line in text.splitlines():
        line = line.strip()
        if not line or line == HEADER:
            continue
        if line.split()[0] == "n":
            return parse_edge_list(text)
        return read_graph6_lines(text)
    raise MalformedRecord("no graph records in input")


def _cmd_compute(args, out: IO[str]) -> int:
    graphs = _load_graphs(_read_text(args.infile))
    w = _Writer(out, args.format)
    g_cols = [
        "index", "n", "m", "mo", "wiener", "diameter",
        "min_degree", "max_degree", "is_tree", "is_regular", "is_chemical",
        "is_bipartite", "has_pendant_vertex", "has_triangle",
        "is_two_connected", "is_two_edge_connected", "is_distance_balanced",
        "bridges", "cut_vertices", "transmissions",
    ]
    if w.fmt != "jsonl":
        w.header(["G"] + g_cols)
        if not args.no_edges:
            w.header(["E", "index", "u", "v", "n_u", "n_v", "eq", "phi"])
    for idx, g in enumerate(graphs):
        mo = mostar_index(g)
        tr = transmissions(g)
        prof = structural_profile(g)
        reports = (
            [] if args.no_edges else [edge_report(g, u, v) for u, v in g.edges()]
        )
        bridges = ";".join(f"{u}-{v}" for u, v in prof.bridges)
        cuts = ";".join(str(v) for v in prof.cut_vertices)
        trs = ";".join(str(t) for t in tr)
        row = [
            "G", idx, g.n, g.m, mo, wiener_index(g), prof.diameter,
            prof.min_degree, prof.max_degree, int(prof.is_tree),
            int(prof.is_regular), int(prof.is_chemical), int(prof.is_bipartite),
            int(prof.has_pendant_vertex), int(prof.has_triangle),
            int(prof.is_two_connected), int(prof.is_two_edge_connected),
            int(mo == 0), bridges or "-", cuts or "-", trs,
        ]
        obj = {
            "index": idx,
            "n": g.n,
            "m": g.m,
            "mo": mo,
            "wiener": wiener_index(g),
            "diameter": prof.diameter,
            "min_degree": prof.min_degree,
            "max_degree": prof.max_degree,
            "is_tree": prof.is_tree,
            "is_regular": prof.is_regular,
            "is_chemical": prof.is_chemical,
            "is_bipartite": prof.is_bipartite,
            "has_pendant_vertex": prof.has_pendant_vertex,
            "has_triangle": prof.has_triangle,
            "is_two_connected": prof.is_two_connected,
            "is_two_edge_connected": prof.is_two_edge_connected,
            "is_distance_balanced": mo == 0,
            "bridges": [list(b) for b in prof.bridges],
            "cut_vertices": list(prof.cut_vertices),
            "transmissions": tr,
            "edge_reports": [
                {"u": r.u, "v": r.v, "n_u": r.n_u, "n_v": r.n_v,
                 "eq": r.eq, "phi": r.phi}
                for r in reports
            ],
        }
        w.row(row, obj)
        if w.fmt != "jsonl":
            for r in reports:
                w.row(["E", idx, r.u, r.v, r.n_u, r.n_v, r.eq, r.phi])
    return EXIT_OK


def _cmd_witness(args, out: IO[str]) -> int:
    if args.layered_even is not None:
        m, k = args.layered_even
        if args.p != 2 * m:
            raise BadParams(
                f"layered-even target must be 2m = {2 * m}, got {args.p}"
            )
        plan = layered_even(m, k)
    elif args.three_layer:
        plan = three_layer(args.p)
    elif args.tree:
        plan = tree_witness(args.p)
    elif args.chemical:
        plan = chemical_witness(args.p)
    else:
        plan = witness(args.p)
    w = _Writer(out, args.format)
    w.header(["p", "family", "params", "graph6", "certified_mo"])
    params = ",".join(str(x) for x in plan.params)
    w.row(
        [plan.target, plan.family, params, encode_graph6(plan.graph), plan.certified_mo],
        {
            "p": plan.target,
            "family": plan.family,
            "params": list(plan.params),
            "graph6": encode_graph6(plan.graph),
            "certified_mo": plan.certified_mo,
        },
    )
    return EXIT_OK


def _cmd_enumerate(args, out: IO[str]) -> int:
    for g in generate_connected(args.n, args.threads):
        out.write(encode_graph6(g) + "\n")
    return EXIT_OK


def _cmd_stats(args, out: IO[str]) -> int:
    if (args.n is None) == (args.infile is None):
        raise BadParams("stats needs exactly one of --n or --in")
    if args.n is not None:
        hist = order_histogram(args.n, args.threads)
    else:
        graphs = read_graph6_lines(_read_text(args.infile))
        if not graphs:
            raise EmptyStream("no graphs in input")
        hist = mo_histogram(graphs)
    w = _Writer(out, args.format)
    if args.histogram:
        w.header(["mo", "count"])
        for value in sorted(hist.counts):
            w.row([value, hist.counts[value]], {"mo": value, "count": hist.counts[value]})
        return EXIT_OK
    row = stats_from_histogram(hist)
    w.header(
        ["n", "count", "min", "min_mult", "max", "max_mult",
         "mode", "mode_mult", "avg_num", "avg_den", "avg_3dp"]
    )
    w.row(
        [row.n, row.count, row.min_value, row.min_mult, row.max_value,
         row.max_mult, row.mode_value, row.mode_mult, row.avg_num,
         row.avg_den, row.avg_3dp],
        {
            "n": row.n, "count": row.count,
            "min": row.min_value, "min_mult": row.min_mult,
            "max": row.max_value, "max_mult": row.max_mult,
            "mode": row.mode_value, "mode_mult": row.mode_mult,
            "avg_num": row.avg_num, "avg_den": row.avg_den,
            "avg_3dp": row.avg_3dp,
        },
    )
    return EXIT_OK


def _cmd_table2(args, out: IO[str]) -> int:
    table = realizer_table(args.n_max, args.mo_max, args.threads)
    w = _Writer(out, args.format)
    cols = list(range(3, args.n_max + 1))
    w.header(["mo"] + [str(n) for n in cols])
    for p in range(2, args.mo_max + 1):
        cells = [table[(p, n)] for n in cols]
        w.row(
            [p] + [c if c else "-" for c in cells],
            {"mo": p, "counts": {str(n): table[(p, n)] for n in cols}},
        )
    return EXIT_OK


def _cmd_verify(args, out: IO[str]) -> int:
    report = verify_suite(args.suite, args.n_max, args.threads)
    w = _Writer(out, args.format)
    w.header(["claim", "population", "counterexamples", "first_counterexample", "proved"])
    for c in report.claims:
        w.row(
            [c.claim, c.population, c.counterexamples,
             c.first_counterexample or "-", int(c.proved)],
            {
                "claim": c.claim,
                "population": c.population,
                "counterexamples": c.counterexamples,
                "first_counterexample": c.first_counterexample,
                "proved": c.proved,
            },
        )
    return EXIT_OK if report.ok else EXIT_FAILURE


def _cmd_codec(args, out: IO[str]) -> int:
    text = _read_text(args.infile)
    if args.encode:
        for g in parse_edge_list(text):
            out.write(encode_graph6(g) + "\n")
    else:
        for g in read_graph6_lines(text):
            out.write(format_edge_list(g))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mostar",
        description="Mostar index toolkit: compute, construct, enumerate, verify.",
    )
    parser.add_argument("--verbose", action="store_true", help="timing on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, threads=False):
        p.add_argument("--format", choices=_FORMATS, default="tsv")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        if threads:
            p.add_argument("--threads", type=int, default=None,
                           help="worker cap for enumeration")

    p = sub.add_parser("compute", help="invariants of input graphs")
    p.add_argument("--in", dest="infile", default="-",
                   help="edge-list or graph6 file, '-' for stdin")
    p.add_argument("--no-edges", action="store_true",
                   help="omit per-edge contribution records")
    common(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("witness", help="certified graph with Mostar index p")
    p.add_argument("p", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--chemical", action="store_true")
    group.add_argument("--tree", action="store_true")
    group.add_argument("--three-layer", dest="three_layer", action="store_true")
    group.add_argument("--layered-even", dest="layered_even", nargs=2,
                       type=int, metavar=("M", "K"))
    common(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("enumerate", help="all connected graphs of one order")
    p.add_argument("--n", type=int, required=True)
    common(p, threads=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("stats", help="Mostar statistics of a stream")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--in", dest="infile", default=None,
                   help="graph6 file, '-' for stdin")
    p.add_argument("--histogram", action="store_true",
                   help="emit the value histogram instead of the summary row")
    common(p, threads=True)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("table2", help="realizer counts per (Mo, n)")
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--mo-max", dest="mo_max", type=int, required=True)
    common(p, threads=True)
    p.set_defaults(func=_cmd_table2)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=DEFAULT_N_MAX)
    common(p, threads=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("codec", help="convert between edge lists and graph6")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--encode", action="store_true")
    group.add_argument("--decode", action="store_true")
    p.add_argument("--in", dest="infile", default="-")
    common(p)
    p.set_defaults(func=_cmd_codec)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    started = time.time()
    out = sys.stdout
    close = False
    if getattr(args, "out", None):
        out = open(args.out, "w", encoding="ascii", newline="\n")
        close = True
    try:
        code = args.func(args, out)
    except NotRealizable as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_NOT_REALIZABLE
    except UnknownRealizability as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_UNKNOWN
    except OutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_OUT_OF_RANGE
    except (MalformedRecord, SelfLoop, BadParams, MixedOrder, EmptyStream,
            UnknownSuite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_MALFORMED
    except MostarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_FAILURE
    finally:
        if close:
            out.close()
    if args.verbose:
        print(f"elapsed: {time.time() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
