"""Command-line interface: ``specine <command> ...``.

Output is written only after all computation has finished, so a failing
command never leaves partial results on stdout.  Exit status is 0 on
success, 1 when a comparison or check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Iterable, Sequence

from . import species as sp
from .errors import SpecineError
from .graphs import (
    Graph,
    canonical_form,
    decorate,
    enumerate_connected,
    from_graph6,
    is_reduced,
    reduction_trace,
    to_graph6,
)
from .graphs.generate import DEFAULT_CAP
from .species import CountTable
from .verify import brute_by_reduction, brute_joint_matrix, run_suite

FORMATS = ("plain", "csv", "json")


# ---------------------------------------------------------------------------
# argument types
# ---------------------------------------------------------------------------

def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _bound(text: str):
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return sp.INF
    return _nonneg(text)


def _fmt_num(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _bound_text(b) -> str:
    return "inf" if b == sp.INF else str(b)


# ---------------------------------------------------------------------------
# commands; each returns (exit status, output text)
# ---------------------------------------------------------------------------

def cmd_series(args) -> tuple[int, str]:
    name = args.name
    if name == "q":
        name = f"q:{_bound_text(args.s)},{_bound_text(args.t)}"
    elif args.s is not None or args.t is not None:
        raise SpecineError("--s and --t only apply to the series q")
    coeffs = sp.type_coefficients(name, args.max_degree, egf=args.egf)
    kind = "egf" if args.egf else "type"
    if args.format == "json":
        doc = {
            "series": name,
            "kind": kind,
            "max_degree": args.max_degree,
            "coefficients": [{"num": c.numerator, "den": c.denominator} for c in coeffs],
        }
        return 0, json.dumps(doc, sort_keys=True)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        w.writerows([n, _fmt_num(c)] for n, c in enumerate(coeffs))
        return 0, buf.getvalue().rstrip("\n")
    return 0, ",".join(_fmt_num(c) for c in coeffs)


def _table_text(table: CountTable, fmt: str, label: str) -> str:
    if fmt == "csv":
        lines = [f"{label},{s},{t},{c}" for (s, t), c in table.matrix.items()]
        return "\n".join(lines)
    rows = table.rows()
    size = len(rows)
    width = max([len(str(c)) for r in rows for c in r] + [len(str(size - 1)), 1])
    out = [f"{label} (rows: sibling number s, columns: tuft number t)"]
    out.append("s\\t " + " ".join(str(t).rjust(width) for t in range(size)))
    for s, r in enumerate(rows):
        out.append(str(s).ljust(4) + " ".join(str(c).rjust(width) for c in r))
    return "\n".join(out)


def _reduced_graphs(n: int) -> list[Graph]:
    out = []
    for m in range(1, n + 1):
        for g in enumerate_connected(m):
            if m == 1 or (is_reduced(g) and not g.is_k2()):
                out.append(g)
    return out


def cmd_joint(args) -> tuple[int, str]:
    n = args.n
    modes = ["brute", "species"] if args.mode == "both" else [args.mode]
    if "brute" in modes and n > DEFAULT_CAP:
        raise SpecineError(f"brute force is capped at n={DEFAULT_CAP}")
    tables: dict[str, dict[str, CountTable]] = {}
    if args.by_reduction:
        if "brute" in modes:
            tables["brute"] = {k.decode(): v for k, v in brute_by_reduction(n).items()}
        if "species" in modes:
            found = {}
            for r in _reduced_graphs(n):
                t = sp.by_reduction_matrix(n, r, args.max_degree)
                if t.total:
                    found[canonical_form(r).decode()] = t
            tables["species"] = dict(sorted(found.items()))
    else:
        if "brute" in modes:
            tables["brute"] = {"": brute_joint_matrix(n)}
        if "species" in modes:
            tables["species"] = {"": sp.joint_matrix(n, args.max_degree)}

    status = 0
    flags = []
    for mode, by_r in tables.items():
        for key, t in by_r.items():
            if not t.is_symmetric():
                status = 1
                flags.append(f"ASYMMETRIC {mode} R={key or '-'} cells {t.asymmetric_cells()}")
    if len(tables) == 2:
        a, b = tables["brute"], tables["species"]
        for key in sorted(set(a) | set(b)):
            if a.get(key, CountTable(n)) != b.get(key, CountTable(n)):
                status = 1
                flags.append(f"MISMATCH R={key or '-'}: brute {a.get(key, CountTable(n)).matrix} "
                             f"species {b.get(key, CountTable(n)).matrix}")

    primary = tables[modes[0]]
    if args.format == "json":
        doc = {
            "n": n,
            "mode": args.mode,
            "by_reduction": args.by_reduction,
            "tables": {
                mode: [{"reduction": k or None, **t.to_json()} for k, t in by_r.items()]
                for mode, by_r in tables.items()
            },
            "flags": flags,
        }
        return status, json.dumps(doc, sort_keys=True)
    chunks = []
    if args.format == "csv":
        chunks.append("reduction,s,t,count")
    for key, t in primary.items():
        label = key if args.format == "csv" else (f"n={n} R={key}" if key else f"n={n}")
        chunks.append(_table_text(t, args.format, label))
    if len(tables) == 2 and not flags:
        chunks.append("brute force and species tables agree")
    chunks.extend(flags)
    return status, "\n".join(c for c in chunks if c)


def _input_graphs(items: Sequence[str]) -> list[str]:
    if items:
        return list(items)
    return [ln.strip() for ln in sys.stdin.read().splitlines() if ln.strip()]


def cmd_reduce(args) -> tuple[int, str]:
    out = []
    for text in _input_graphs(args.graph6):
        g = from_graph6(text)
        steps = reduction_trace(g, k2_as_bullet=args.k2_as_bullet)
        result = steps[-1].graph if steps else g
        if args.trace:
            out.append(f"input {to_graph6(g)} ({g.n} vertices)")
            for st in steps:
                out.append(f"round {st.round} {st.operation} {to_graph6(st.graph)} ({st.graph.n} vertices)")
            rounds = steps[-1].round if steps else 0
            out.append(f"reduced {to_graph6(result)} after {rounds} round(s)")
        else:
            out.append(to_graph6(result))
    return 0, "\n".join(out)


def cmd_decorate(args) -> tuple[int, str]:
    out = []
    for text in _input_graphs(args.graph6):
        out.append(json.dumps(decorate(from_graph6(text)).to_json(), sort_keys=True))
    return 0, "\n".join(out)


def cmd_enumerate(args) -> tuple[int, str]:
    graphs = list(enumerate_connected(args.n, cap=args.cap, jobs=args.jobs))
    if args.count:
        return 0, str(len(graphs))
    codes = [to_graph6(g) for g in graphs]
    if args.format == "json":
        return 0, json.dumps({"n": args.n, "count": len(codes), "graph6": codes})
    if args.format == "csv":
        return 0, "\n".join(["graph6"] + codes)
    return 0, "\n".join(codes)


def cmd_check(args) -> tuple[int, str]:
    report = run_suite(
        max_n=args.max_n,
        max_st=args.max_st,
        max_degree=args.max_degree,
        seed=args.seed,
        jobs=args.jobs,
        stretch=args.stretch,
        only=args.only or None,
    )
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.dumps() + "\n")
    text = report.dumps() if args.format == "json" else report.table()
    return (0 if report.ok else 1), text


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specine",
        description="Sibling and tuft numbers of unlabeled connected graphs: species series, "
        "brute-force tables and cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="coefficients of a named series")
    p.add_argument("name", help="one of " + ", ".join(sp.SERIES_KEYS[:-1]) + ", q (with --s/--t) or q:S,T")
    p.add_argument("--max-degree", type=_nonneg, default=10)
    p.add_argument("--s", type=_bound, default=None, help="sibling bound for q (integer or inf)")
    p.add_argument("--t", type=_bound, default=None, help="tuft bound for q (integer or inf)")
    p.add_argument("--egf", action="store_true", help="labeled counts instead of unlabeled")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_series)

    for name, text in (("joint", "joint (sibling, tuft) table for n vertices"),
                       ("by-reduction", "one joint table per reduction R (same as joint --by-reduction)")):
        p = sub.add_parser(name, help=text)
        p.add_argument("n", type=_positive)
        if name == "joint":
            p.add_argument("--by-reduction", action="store_true", help="one table per reduction R")
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--brute", dest="mode", action="store_const", const="brute")
        mode.add_argument("--species", dest="mode", action="store_const", const="species")
        mode.add_argument("--both", dest="mode", action="store_const", const="both")
        p.add_argument("--max-degree", type=_nonneg, default=None, help="species truncation degree")
        p.add_argument("--format", choices=FORMATS, default="plain")
        p.set_defaults(func=cmd_joint, mode="species", by_reduction=name == "by-reduction")

    p = sub.add_parser("reduce", help="reduce graphs given in graph6 (arguments or stdin)")
    p.add_argument("graph6", nargs="*")
    p.add_argument("--trace", action="store_true", help="print every leaf-removal and contraction stage")
    p.add_argument("--k2-as-bullet", action="store_true", help="reduce K2 to the single vertex")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("decorate", help="decorated graph (graph6 plus tag map) of graph6 inputs")
    p.add_argument("graph6", nargs="*")
    p.set_defaults(func=cmd_decorate)

    p = sub.add_parser("enumerate", help="one graph6 line per unlabeled connected graph")
    p.add_argument("n", type=_positive)
    p.add_argument("--count", action="store_true", help="print only the number of graphs")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="largest n allowed")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="run the verification suite")
    p.add_argument("--max-n", type=_positive, default=7)
    p.add_argument("--max-st", type=_nonneg, default=6)
    p.add_argument("--max-degree", type=_nonneg, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--stretch", action="store_true", help="allow --max-n 8; skip the labeled-scan oracle")
    p.add_argument("--only", action="append", metavar="CHECK", help="run only this check (repeatable)")
    p.add_argument("--report", metavar="PATH", help="also write the JSON report here")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    if args.command == "check":
        if args.max_n > 8 or (args.max_n == 8 and not args.stretch):
            parser.error("--max-n above 7 needs --stretch (and at most 8)")
        if args.max_degree < args.max_n:
            parser.error("--max-degree must be at least --max-n")
    try:
        status, text = args.func(args)
    except (SpecineError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2
    if text:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
