"""Command-line interface producing machine-readable classification reports.

Exit codes: 0 success, 1 usage or parse error, 2 connected/supported-input
violations, 3 internal invariant breach (never expected).  All floats are
printed with 12 significant digits and JSON reports use canonical key order,
so outputs are byte-reproducible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .classify import (
    ClassificationRecord,
    classify,
    classify_all,
    closed_form_matches,
    sieve_trace,
)
from .embedding import embed, verify_embedding
from .engine import is_cnd_exact, qec
from .errors import (
    BadParamsError,
    CatalogParseError,
    DisconnectedError,
    EmptySetError,
    Graph6Error,
    NotQEError,
    NotRegularError,
    OrderOneError,
    OrderTooLargeError,
    OutOfRangeError,
    QecError,
    SelfLoopError,
    UnsupportedFamilyError,
)
from .formulas import formula_value, qec_formula_exact
from .graph6 import identify, load_catalog, parse_graph6, to_graph6
from .graphs import FamilySpec, Graph, build_family, distance_matrix

_USAGE_ERRORS = (Graph6Error, CatalogParseError, BadParamsError, OSError, ValueError)
_INPUT_ERRORS = (DisconnectedError, OrderOneError, OrderTooLargeError, NotQEError,
                 UnsupportedFamilyError, NotRegularError, EmptySetError,
                 OutOfRangeError, SelfLoopError)

_CSV_COLUMNS = ["id", "graph6", "n", "edges", "qec", "verdict", "witness",
                "sieve_step", "closed_form"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _round12(value: float) -> float:
    return float(f"{value:.12g}")


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def _read_graph(arg: str) -> Graph:
    text = arg
    if arg == "-":
        text = ""
        for line in sys.stdin.read().splitlines():
            if line.strip():
                text = line.strip()
                break
    return parse_graph6(text)


def _record_dict(rec: ClassificationRecord, ident: str | None = None) -> dict:
    matches = closed_form_matches(rec.graph)
    return {
        "id": ident,
        "graph6": to_graph6(rec.graph),
        "n": rec.graph.n,
        "edges": rec.graph.edge_count,
        "qec": _round12(rec.qec_value),
        "verdict": rec.verdict.value,
        "witness": list(rec.witness) if rec.witness is not None else None,
        "sieve_step": rec.sieve_step,
        "closed_forms": [
            {"family": str(spec), "value": _round12(val), "exact": expr}
            for spec, val, expr in matches
        ],
    }


def _report(input_desc: str, records: list[dict], summary: dict | None = None) -> dict:
    if summary is None:
        verdicts = [r["verdict"] for r in records if r["verdict"]]
        summary = {
            "qe": verdicts.count("QE"),
            "non_primary": verdicts.count("NonQeNonPrimary"),
            "primary": verdicts.count("NonQePrimary"),
        }
    return {
        "version": __version__,
        "input": input_desc,
        "records": records,
        "summary": summary,
    }


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(", ", ": "), indent=1)


def _csv_row(rec: dict) -> list[str]:
    return [
        rec["id"] or "",
        rec["graph6"],
        str(rec["n"]),
        str(rec["edges"]),
        _fmt(rec["qec"]),
        rec["verdict"] or "",
        " ".join(str(v) for v in rec["witness"]) if rec["witness"] else "",
        rec["sieve_step"] or "",
        rec["closed_forms"][0]["exact"] if rec["closed_forms"] else "",
    ]


def _records_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for rec in records:
        writer.writerow(_csv_row(rec))
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def _cmd_compute(args) -> int:
    g = _read_graph(args.graph6)
    report = qec(g)
    verdict = None
    if args.exact:
        verdict = "QE" if is_cnd_exact(g) else "non-QE"
    if args.json:
        rec = {
            "id": None,
            "graph6": to_graph6(g),
            "n": g.n,
            "edges": g.edge_count,
            "qec": _round12(report.value),
            "mu": _round12(report.mu),
            "residual": _round12(report.residual),
            "lambda1": _round12(report.lambda1),
            "lambda2": _round12(report.lambda2),
            "maximizer": [_round12(x) for x in report.f],
            "verdict": verdict,
        }
        print(_dump_json(_report(f"compute {to_graph6(g)}", [rec])))
        return 0
    print(f"graph6: {to_graph6(g)}")
    print(f"n: {g.n}")
    print(f"edges: {g.edge_count}")
    print(f"qec: {_fmt(report.value)}")
    print(f"mu: {_fmt(report.mu)}")
    print(f"residual: {_fmt(report.residual)}")
    print(f"lambda1: {_fmt(report.lambda1)}")
    print(f"lambda2: {_fmt(report.lambda2)}")
    if verdict is not None:
        print(f"verdict: {verdict}")
    return 0


def _cmd_classify(args) -> int:
    g = _read_graph(args.graph6)
    rec = _record_dict(classify(g))
    if args.json:
        print(_dump_json(_report(f"classify {rec['graph6']}", [rec])))
        return 0
    print(f"graph6: {rec['graph6']}")
    print(f"verdict: {rec['verdict']}")
    print(f"qec: {_fmt(rec['qec'])}")
    witness = " ".join(str(v) for v in rec["witness"]) if rec["witness"] else "none"
    print(f"witness: {witness}")
    print(f"sieve_step: {rec['sieve_step']}")
    return 0


def _cmd_enumerate(args) -> int:
    records, summary = classify_all(args.n)
    dicts = [_record_dict(r) for r in records]
    summary_dict = {"qe": summary.qe, "non_primary": summary.non_primary,
                    "primary": summary.primary}
    if args.format == "json":
        table = _dump_json(_report(f"enumerate n={args.n}", dicts, summary_dict))
    else:
        table = _records_csv(dicts)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(table if table.endswith("\n") else table + "\n")
    else:
        print(table)
    print(f"qe={summary.qe} non_primary={summary.non_primary} primary={summary.primary}")
    return 0


def _cmd_family(args) -> int:
    spec = FamilySpec.parse(args.spec)
    value = formula_value(spec)
    engine_value = qec(build_family(spec)).value
    print(f"family: {spec}")
    print(f"formula: {_fmt(value)}")
    print(f"exact: {qec_formula_exact(spec)}")
    print(f"engine: {_fmt(engine_value)}")
    print(f"delta: {_fmt(abs(value - engine_value))}")
    return 0


def _cmd_embed(args) -> int:
    g = _read_graph(args.graph6)
    emb = embed(g)
    header = ["vertex"] + [f"x{k + 1}" for k in range(emb.dim)]
    print(",".join(header))
    for v in range(g.n):
        row = [str(v)] + [_fmt(x) for x in emb.coords[v]]
        print(",".join(row))
    if args.check:
        defect = verify_embedding(emb, distance_matrix(g))
        print(f"# defect {_fmt(defect)}")
    return 0


def _cmd_identify(args) -> int:
    g = _read_graph(args.graph6)
    catalog = load_catalog(args.catalog)
    for warning in catalog.warnings:
        print(f"# warning: {warning}", file=sys.stderr)
    ident = identify(g, catalog)
    print(ident if ident is not None else "unknown")
    return 0


def _cmd_trace(args) -> int:
    g = _read_graph(args.graph6)
    for step, outcome in sieve_trace(g):
        print(f"{step}: {outcome}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qec", description="quadratic embedding constants of small graphs")
    parser.add_argument("--version", action="version", version=f"qec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="QEC report for one graph")
    p.add_argument("graph6", help="graph6 record, or - for stdin")
    p.add_argument("--exact", action="store_true", help="add the exact QE verdict")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("classify", help="QE / non-QE verdict with witness")
    p.add_argument("graph6")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="classify all connected graphs on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write the table to this file")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("family", help="closed form vs engine for a family spec")
    p.add_argument("spec", help="e.g. path:6, multipartite:3,2, wedge:5,2, knp4:6")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("embed", help="coordinates of a quadratic embedding (CSV)")
    p.add_argument("graph6")
    p.add_argument("--check", action="store_true", help="verify and print the defect")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("identify", help="catalog id of a graph")
    p.add_argument("graph6")
    p.add_argument("--catalog", required=True)
    p.set_defaults(func=_cmd_identify)

    p = sub.add_parser("trace", help="sieve steps for one graph")
    p.add_argument("graph6")
    p.set_defaults(func=_cmd_trace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except QecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # invariant breach; never expected
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
