"""Command-line front end.

Every subcommand writes one result to stdout in text, json or csv form. Errors
go to stderr as a single line starting with ``error:``.

Exit codes: 0 success, 1 verification failure or method disagreement,
2 usage, parse or work-cap error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import families as fam
from .core import ParseError, closure, format_generators, parse_generators, render_ascii
from .enumerate import appendix_table, audit_appendix, classify_all
from .gorenstein import classify
from .hilbert import (HilbertSeries, HVector, InconsistencyError, WorkCapExceeded, direct_hf,
                      enumerate_paths, expand, hilbert_series)
from .verify import run_suite

MAX_SAFE_INT = 2**53 - 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _jsonable(obj, flag: list):
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        if abs(obj) > MAX_SAFE_INT:
            flag[0] = True
            return str(obj)
        return obj
    if isinstance(obj, dict):
        return {k: _jsonable(v, flag) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v, flag) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(command: str, payload: dict) -> str:
    flag = [False]
    body = _jsonable(payload, flag)
    envelope = {"command": command, "format": "json", **body}
    if flag[0]:
        envelope["bigints_as_strings"] = True
    return json.dumps(envelope)


def _bracket(seq) -> str:
    return "[" + ",".join(str(x) for x in seq) + "]"


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(header)
    for row in rows:
        writer.writerow([_bracket(v) if isinstance(v, (list, tuple)) else v for v in row])
    return buf.getvalue().rstrip("\n")


def _diagram(args):
    return closure(parse_generators(args.gens))


def cmd_hvector(args) -> tuple[int, str]:
    d = _diagram(args)
    series = hilbert_series(d)
    rep = classify(d)
    payload = {"n": d.n, "h": list(series.numerator), "gorenstein": rep.gorenstein,
               "series": str(series), "denom_power": series.denom_power}
    if args.format == "json":
        return 0, to_json("hvector", payload)
    if args.format == "csv":
        return 0, to_csv(["gens", "n", "h", "gorenstein"],
                         [[args.gens, d.n, payload["h"], rep.gorenstein]])
    return 0, f"n = {d.n}\nh = {_bracket(payload['h'])}\nHS = {series}\ngorenstein = {rep.gorenstein}"


def cmd_classify(args) -> tuple[int, str]:
    d = _diagram(args)
    rep = classify(d)
    payload = rep.to_dict()
    payload["bounds"] = list(d.bounds)
    if args.format == "json":
        return 0, to_json("classify", payload)
    ev = rep.structural
    extra = format_generators(ev.extra_generators)
    if args.format == "csv":
        return 0, to_csv(["gens", "n", "k", "h", "gorenstein", "extra_generators", "condition"],
                         [[args.gens, d.n, rep.k, list(rep.hvector), rep.gorenstein, extra,
                           ev.condition]])
    lines = [
        f"generators       {format_generators(rep.generators)}",
        f"n                {d.n} (normalized {rep.normalized_n})",
        f"h                {_bracket(rep.hvector)}",
        f"gorenstein       {rep.gorenstein}",
        f"k                {ev.k}",
        f"extra generators {extra or '-'}",
        f"structural       {ev.condition}",
    ]
    if ev.offending:
        lines.append(f"offending        {format_generators(ev.offending)}")
    if ev.shared:
        lines.append(f"shared D boxes   {format_generators(ev.shared)}")
    return 0, "\n".join(lines)


def cmd_series(args) -> tuple[int, str]:
    h, power = fam.family_hvector(args.family, k=args.k, n=args.n, j=args.j, a=args.a)
    d = fam.family_diagram(args.family, k=args.k, n=args.n, j=args.j, a=args.a)
    dp = hilbert_series(d)
    if dp.numerator != h or dp.denom_power != power:
        raise InconsistencyError(f"closed form {list(h)} disagrees with DP {list(dp.numerator)}")
    if args.dim is not None:
        if args.dim < power:
            raise UsageError(f"--dim {args.dim} is below the minimal dimension {power}")
        power = args.dim
    series = HilbertSeries(HVector(h), power)
    payload = {"family": args.family, "numerator": list(h), "denom_power": power,
               "series": str(series)}
    if args.format == "json":
        return 0, to_json("series", payload)
    if args.format == "csv":
        return 0, to_csv(["family", "numerator", "denom_power"], [[args.family, list(h), power]])
    return 0, f"numerator = {_bracket(h)}\ndenom_power = {power}\nHS = {series}"


def cmd_enumerate(args) -> tuple[int, str]:
    rows = classify_all(args.n)
    if args.gorenstein_only:
        rows = [r for r in rows if r.gorenstein]
    records = [r.to_dict() for r in rows]
    if args.format == "json":
        return 0, to_json("enumerate", {"n": args.n, "count": len(records), "rows": records})
    header = ["bounds", "generators", "extra_generators", "h", "gorenstein"]
    table = [[rec[key] for key in header] for rec in records]
    if args.format == "csv":
        return 0, to_csv(header, table)
    lines = [f"{'bounds':<{3 * args.n + 2}} {'generators':<24} {'h':<28} gorenstein"]
    for rec in records:
        lines.append(f"{_bracket(rec['bounds']):<{3 * args.n + 2}} {rec['generators']:<24} "
                     f"{_bracket(rec['h']):<28} {rec['gorenstein']}")
    lines.append(f"{len(records)} diagrams")
    return 0, "\n".join(lines)


def cmd_appendix(args) -> tuple[int, str]:
    if args.audit:
        report = audit_appendix(args.kmax).to_dict()
        if args.format == "json":
            return 0, to_json("appendix", report)
        return 0, _audit_text(report)
    rows = appendix_table(args.kmax)
    if args.format == "json":
        return 0, to_json("appendix", {"kmax": args.kmax, "rows": rows})
    if args.format == "csv":
        return 0, to_csv(["k", "h", "W"], [[r["k"], r["h"], r["generators"]] for r in rows])
    lines = ["k  h-vector                     W"]
    for r in rows:
        lines.append(f"{r['k']:<2} {'(' + ', '.join(map(str, r['h'])) + ')':<28} {r['W']}")
    return 0, "\n".join(lines)


def _audit_text(report: dict) -> str:
    lines = [f"Appendix audit, k <= {report['kmax']}"]
    for k, c in report["counts"].items():
        lines.append(f"  k={k}: {c['table_rows']} table rows, "
                     f"{c['enumerated_gorenstein']} enumerated Gorenstein")
    lines.append(f"table rows with h found: {len(report['table_rows_with_h_found'])}")
    sections = [
        ("table rows whose h-vector no Gorenstein diagram has", "table_rows_with_h_not_found"),
        ("labels with a generator inside V_2k", "labels_inside_v2k"),
        ("labels whose diagram has a different h-vector", "labels_with_wrong_h"),
        ("enumerated Gorenstein diagrams not listed", "enumerated_but_unlisted"),
    ]
    for title, key in sections:
        entries = report[key]
        lines.append(f"{title}: {len(entries)}")
        for e in entries:
            extra = ""
            if "computed_h" in e:
                extra = f" computed {_bracket(e['computed_h'])}"
            if "carriers" in e and e["carriers"]:
                extra += " carried by " + ", ".join(c["W"] for c in e["carriers"])
            lines.append(f"  k={e['k']} {e['W']} h={_bracket(e['h'])}{extra}")
    lines.append("clean" if report["clean"] else "discrepancies found")
    return "\n".join(lines)


def cmd_render(args) -> tuple[int, str]:
    return 0, render_ascii(_diagram(args))


def cmd_paths(args) -> tuple[int, str]:
    d = _diagram(args)
    paths = enumerate_paths(d)
    if args.format == "json":
        payload = {"n": d.n, "count": len(paths),
                   "paths": [{"boxes": [[m.i, m.j] for m in p.boxes], "steps": p.steps,
                              "n_parts": p.n_parts} for p in paths]}
        return 0, to_json("paths", payload)
    if args.format == "csv":
        return 0, to_csv(["start", "steps", "n_parts"],
                         [[str(p.start), p.steps, p.n_parts] for p in paths])
    return 0, "\n".join(f"{p.n_parts}  {p}" for p in paths)


def cmd_expand(args) -> tuple[int, str]:
    d = _diagram(args)
    values = expand(hilbert_series(d), args.upto)
    payload = {"n": d.n, "hf": values}
    code = 0
    if args.oracle:
        oracle = [direct_hf(d, i) for i in range(args.upto + 1)]
        payload["oracle"] = oracle
        payload["agree"] = oracle == values
        code = 0 if oracle == values else 1
    if args.format == "json":
        return code, to_json("expand", payload)
    header = ["i", "hf"] + (["oracle"] if args.oracle else [])
    table = [[i, v] + ([payload["oracle"][i]] if args.oracle else []) for i, v in enumerate(values)]
    if args.format == "csv":
        return code, to_csv(header, table)
    lines = ["  ".join(str(x) for x in row) for row in table]
    if args.oracle:
        lines.append("oracle agrees" if payload["agree"] else "oracle DISAGREES")
    return code, "\n".join(lines)


def cmd_verify(args) -> tuple[int, str]:
    checks = run_suite(max_n=args.max_n, hf_degree=args.hf_degree, samples=args.samples,
                       seed=args.seed)
    ok = all(c.passed for c in checks)
    if args.format == "json":
        payload = {"passed": ok, "checks": [{"name": c.name, "passed": c.passed,
                                             "detail": c.detail} for c in checks]}
        return (0 if ok else 1), to_json("verify", payload)
    lines = [c.line() for c in checks]
    lines.append("all properties passed" if ok else "verification FAILED")
    return (0 if ok else 1), "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ssq", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_, gens=True):
        p = sub.add_parser(name, help=help_)
        if gens:
            p.add_argument("--gens", required=True, help="generators, e.g. '3,4;2,6'")
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.set_defaults(func=func)
        return p

    add("hvector", cmd_hvector, "h-vector, dimension and Hilbert series")
    add("classify", cmd_classify, "Gorenstein classification report")
    p = add("series", cmd_series, "closed-form series of a family", gens=False)
    p.add_argument("--family", required=True, choices=fam.FAMILIES)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--dim", type=int, help="report over this many variables (adds free variables)")
    p = add("enumerate", cmd_enumerate, "survey all no-free-variable diagrams", gens=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gorenstein-only", action="store_true")
    p = add("appendix", cmd_appendix, "reproduce or audit the k <= 5 table", gens=False)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--audit", action="store_true")
    add("render", cmd_render, "ASCII picture of the diagram")
    add("paths", cmd_paths, "list maximal NE-paths")
    p = add("expand", cmd_expand, "Hilbert function values")
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against the semigroup count")
    p = add("verify", cmd_verify, "run the invariant suite", gens=False)
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--hf-degree", type=int, default=3)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    return parser


def run(argv: list[str]) -> tuple[int, str, str]:
    """Run one command; return ``(exit_code, stdout, stderr)``."""
    try:
        args = build_parser().parse_args(argv)
        code, out = args.func(args)
        return code, out + "\n", ""
    except (UsageError, ParseError, WorkCapExceeded, ValueError) as exc:
        return 2, "", f"error: {_one_line(exc)}\n"
    except InconsistencyError as exc:
        return 1, "", f"error: inconsistency: {_one_line(exc)}\n"


def _one_line(exc: Exception) -> str:
    return " ".join(str(exc).split())


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(argv)  # prints help and exits
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
