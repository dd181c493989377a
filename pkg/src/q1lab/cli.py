"""Command-line front end.

Exit status: 0 success, 1 a checked inequality failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings

from q1lab import bounds, families, verify
from q1lab.formats import from_graph6, read_edge_list, to_edge_list, to_graph6
from q1lab.graph import GraphError, clique_number, is_connected
from q1lab.spectral import SpectralError, zykov_chain

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _add_input(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--edges", metavar="PATH", help="edge-list file: 'n m' then m lines 'u v'")
    src.add_argument("--graph6", metavar="STR", help="graph6 string")
    src.add_argument("--family", metavar="SPEC", help="e.g. turan:10,3  kite:7,4  kpq:2,3  cpm:8")


def _add_output(p, choices=("table", "csv", "json"), default="table"):
    p.add_argument("--format", choices=choices, default=default)
    p.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="q1lab", description="Signless Laplacian spectral radius bounds and checks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate every bound on one graph")
    _add_input(p)
    _add_output(p)

    p = sub.add_parser("family", help="emit a named family member")
    p.add_argument("spec", nargs="?", help="family spec, e.g. kite:7,4")
    p.add_argument("--family", dest="family_opt", metavar="SPEC")
    _add_output(p, choices=("g6", "edges"), default="g6")

    p = sub.add_parser("sweep", help="exhaustive check over connected graphs of order n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", choices=("upper", "lower", "region", "ratio", "all"), default="all")
    p.add_argument("--dedup", action="store_true", help="one record per isomorphism class")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default: all cores)")
    _add_output(p)

    p = sub.add_parser("counterexamples", help="Turan graphs beating 3n/2 + omega - 4")
    p.add_argument("--n-max", type=int, required=True)
    _add_output(p)

    p = sub.add_parser("table", help="bound comparison for T(10,3) and G2")
    _add_output(p)

    p = sub.add_parser("zykov", help="iterate the duplication step, printing q1 along the way")
    _add_input(p)
    _add_output(p)
    return parser


def _load_graph(args):
    if args.edges:
        return read_edge_list(args.edges)
    if args.graph6:
        return from_graph6(args.graph6)
    return families.parse_family(args.family).build()


def _write(args, text):
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_eval(args):
    g = _load_graph(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = bounds.evaluate_all(g)
    for wmsg in caught:
        print(f"warning: {wmsg.message}", file=sys.stderr)
    if args.format == "json":
        _write(args, report.to_json() + "\n")
    elif args.format == "csv":
        _write(args, _csv_text(bounds.CSV_COLUMNS, [report.csv_row()]))
    else:
        lines = [f"graph {report.graph_id}  n={report.n} m={report.m} omega={report.omega} chi={report.chi}"]
        lines.append(f"{'q1':>14} {report.q1:.4f}")
        for name, e in report.bounds.items():
            if e.value is None:
                lines.append(f"{name:>14} n/a")
            else:
                flag = "  attained" if e.attained else ""
                lines.append(f"{name:>14} {e.value:.4f}  slack {e.slack:+.4f}{flag}")
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_family(args):
    text = args.spec or args.family_opt
    if not text:
        raise GraphError("family needs a spec, e.g. 'family kite:7,4'")
    g = families.parse_family(text).build()
    _write(args, to_graph6(g) + "\n" if args.format == "g6" else to_edge_list(g))
    return EXIT_OK


_CHECKS = {
    "upper": verify.sharpness_sweep,
    "lower": verify.lower_sweep,
    "region": verify.conjecture_region_check,
    "ratio": verify.ratio_check,
}


def _dedup_records(n, records):
    seen, out = set(), []
    for r in records:
        key = verify.canonical_mask(n, from_graph6(r.graph).to_mask())
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def _records_text(fmt, records, summaries):
    if fmt == "json":
        return verify.records_jsonl(records) + json.dumps({"summary": summaries}) + "\n"
    if fmt == "csv":
        return _csv_text(verify.RECORD_FIELDS, [[getattr(r, f) for f in verify.RECORD_FIELDS] for r in records])
    lines = []
    for s in summaries:
        lines.append(json.dumps(s))
    for r in records:
        lines.append(
            f"{r.graph:<12} {r.family or '-':<12} omega={r.omega} q1={r.q1:.4f} bound={r.bound:.4f} slack={r.slack:+.2e}"
        )
    return "\n".join(lines) + "\n"


def cmd_sweep(args):
    if not 1 <= args.n <= verify.MAX_SWEEP_N:
        raise GraphError(f"--n must be in 1..{verify.MAX_SWEEP_N}")
    workers = args.workers if args.workers is not None else verify.default_workers()
    checks = list(_CHECKS) if args.check == "all" else [args.check]
    records, summaries, status = [], [], EXIT_OK
    for name in checks:
        try:
            res = _CHECKS[name](args.n, workers)
        except verify.VerificationError as exc:
            print(f"VIOLATION ({name}): {exc}", file=sys.stderr)
            print(json.dumps(exc.report), file=sys.stderr)
            return EXIT_VIOLATION
        recs = res.records + res.violations
        records += _dedup_records(args.n, recs) if args.dedup else recs
        summaries.append(res.summary)
        if res.violations and res.summary.get("hypothesis_n_ge_10"):
            status = EXIT_VIOLATION
    _write(args, _records_text(args.format, records, summaries))
    if args.format == "csv":
        print(json.dumps({"summary": summaries}), file=sys.stderr)
    return status


def cmd_counterexamples(args):
    certs = verify.find_counterexamples(args.n_max)
    if args.format == "json":
        _write(args, "".join(json.dumps(c.to_dict()) + "\n" for c in certs))
    elif args.format == "csv":
        fields = list(verify.CounterexampleCert.__dataclass_fields__)
        rows = [[getattr(c, f) if f != "parts" else "-".join(map(str, c.parts)) for f in fields] for c in certs]
        _write(args, _csv_text(fields, rows))
    else:
        lines = [f"{'n':>3} {'omega':>5} {'q1(T)':>10} {'3n/2+w-4':>9} {'margin':>8}  parts"]
        for c in certs:
            lines.append(
                f"{c.n:>3} {c.omega:>5} {c.q1:>10.4f} {c.threshold:>9.1f} {c.margin:>8.4f}  {c.parts}"
            )
        lines.append(f"{len(certs)} certificates")
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_table(args):
    rows = verify.example_table()
    if args.format == "json":
        _write(args, json.dumps({name: dict(zip(verify.TABLE_COLUMNS, vals)) for name, vals in rows}) + "\n")
    elif args.format == "csv":
        _write(args, _csv_text(("graph",) + verify.TABLE_COLUMNS, [[n] + [f"{v:.4f}" for v in vals] for n, vals in rows]))
    else:
        _write(args, verify.format_table(rows))
    return EXIT_OK


def cmd_zykov(args):
    g = _load_graph(args)
    if not is_connected(g):
        raise GraphError("zykov needs a connected graph")
    chain = zykov_chain(g)
    steps = [
        {"step": i, "graph6": to_graph6(h), "q1": q, "omega": clique_number(h)}
        for i, (h, q) in enumerate(zip(chain.graphs, chain.q1))
    ]
    if args.format == "json":
        _write(args, json.dumps({"steps": steps}) + "\n")
    elif args.format == "csv":
        _write(args, _csv_text(("step", "graph6", "q1", "omega"), [list(s.values()) for s in steps]))
    else:
        _write(args, "".join(f"{s['step']:>3}  q1={s['q1']:.6f}  omega={s['omega']}  {s['graph6']}\n" for s in steps))
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "family": cmd_family,
    "sweep": cmd_sweep,
    "counterexamples": cmd_counterexamples,
    "table": cmd_table,
    "zykov": cmd_zykov,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (verify.VerificationError, SpectralError) as exc:
        print(f"VIOLATION: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
