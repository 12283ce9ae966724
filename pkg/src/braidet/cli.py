"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 disagreement between computation routes (an implementation bug).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from typing import Callable, Iterable, Sequence

from .braid import (
    BraidParseError,
    TghwParams,
    expand_tghw,
    exponent_sum,
    letter_count,
    parse_params,
    parse_word,
    render_word,
)
from .burau import alexander, determinant_fast
from .classify import QaVerdict, quasi_alternating, recognize_family
from .closed_form import det_closed_form, matrix_oracle
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DISAGREE = 0, 1, 2, 3

ROUTES = ("closed", "burau", "matrix", "all")


class InputError(Exception):
    pass


class RouteDisagreement(Exception):
    pass


def data_path(name: str):
    return resources.files("braidet") / "data" / name


def _workers() -> int:
    raw = os.environ.get("BRAIDET_THREADS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _ordered_map(fn: Callable, items: Sequence) -> list:
    workers = min(_workers(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _emit_jsonl(records: Iterable[dict], out) -> None:
    for rec in records:
        out.write(json.dumps(rec) + "\n")


# -- det ------------------------------------------------------------------

_PARAMS_LITERAL = re.compile(r"\s*[+-]?\d+\s*(,\s*[+-]?\d+\s*)*")


def _classify_input(text: str) -> tuple[str, object]:
    if _PARAMS_LITERAL.fullmatch(text):
        return "params", parse_params(text)
    return "word", parse_word(text)


def compute_record(kind: str, value, route: str = "all") -> dict:
    """One det record; raises RouteDisagreement if the selected routes differ."""
    dets: dict[str, int] = {}
    delta = None
    if kind == "params":
        p: TghwParams = value
        word = expand_tghw(p)
        if route in ("closed", "all"):
            dets["closed"] = det_closed_form(p)
        if route in ("matrix", "all"):
            dets["matrix"] = matrix_oracle(p)
            dets["fast"] = determinant_fast(word)
        if route in ("burau", "all"):
            res = alexander(word)
            dets["burau"] = res.determinant
            delta = res.alexander
        params = p.as_dict()
        family = recognize_family(p)
        qa = quasi_alternating(p)
    else:
        word = value
        if route == "closed":
            raise InputError("the closed route needs family parameters m1,m2,n,l, not a braid word")
        if route in ("matrix", "all"):
            dets["matrix"] = determinant_fast(word)
        if route in ("burau", "all"):
            res = alexander(word)
            dets["burau"] = res.determinant
            delta = res.alexander
        params = None
        family = None
        qa = QaVerdict("unknown", "braid word given without family parameters")
    if len(set(dets.values())) != 1:
        raise RouteDisagreement(f"routes disagree for {render_word(word) or '<empty>'}: {dets}")
    return {
        "params": params,
        "word": render_word(word),
        "determinant": next(iter(dets.values())),
        "alexander": None if delta is None else str(delta),
        "family": family,
        "qa": qa.as_dict(),
    }


def _det_job(job):
    kind, value, route = job
    try:
        return "ok", compute_record(kind, value, route)
    except RouteDisagreement as exc:
        return "disagree", str(exc)
    except InputError as exc:
        return "input", str(exc)


_DET_CSV = ["m1", "m2", "n", "l", "word", "determinant", "alexander", "family", "qa"]


def cmd_det(args, out, err) -> int:
    raw = getattr(args, "ordered", None)
    if raw is None:
        raw = [("auto", s) for s in args.inputs] + [("word", s) for s in args.word]
    if not raw:
        err.write("error: give at least one parameter literal or --word\n")
        return EXIT_INPUT
    jobs = []
    for kind, text in raw:
        try:
            if kind == "word":
                jobs.append(("word", parse_word(text), args.route))
            else:
                k, v = _classify_input(text)
                jobs.append((k, v, args.route))
        except BraidParseError as exc:
            err.write(f"error: {text!r}: {exc}\n")
            return EXIT_INPUT
    results = _ordered_map(_det_job, jobs)
    records = []
    for status, payload in results:
        if status == "input":
            err.write(f"error: {payload}\n")
            return EXIT_INPUT
        if status == "disagree":
            err.write(f"internal error: {payload}\n")
            return EXIT_DISAGREE
        records.append(payload)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(_DET_CSV)
        for r in records:
            p = r["params"] or {}
            w.writerow([p.get("m1", ""), p.get("m2", ""), p.get("n", ""), p.get("l", ""),
                        r["word"], r["determinant"], r["alexander"] or "", r["family"] or "",
                        r["qa"]["value"]])
    else:
        _emit_jsonl(records, out)
    return EXIT_OK


# -- table ----------------------------------------------------------------

TABLE_COLUMNS = ["m1", "m2", "n", "l", "name", "det"]


def parse_paramfile(lines: Iterable[str]) -> tuple[list[tuple[TghwParams, str]], list[str]]:
    """Rows ``m1,m2,n,l [name]``; blank lines and ``#`` comments are skipped."""
    rows, errors = [], []
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        literal, _, name = stripped.partition(" ")
        try:
            rows.append((parse_params(literal), name.strip()))
        except BraidParseError as exc:
            errors.append(f"line {lineno}: {exc}")
    return rows, errors


def table_row(item: tuple[TghwParams, str]) -> dict:
    """Determinant by every route; raises RouteDisagreement on any mismatch."""
    p, name = item
    word = expand_tghw(p)
    dets = {
        "closed": det_closed_form(p),
        "matrix": matrix_oracle(p),
        "fast": determinant_fast(word),
        "burau": alexander(word).determinant,
    }
    if len(set(dets.values())) != 1:
        raise RouteDisagreement(f"routes disagree for {p}: {dets}")
    return {"m1": p.m1, "m2": p.m2, "n": p.n, "l": p.l, "name": name, "det": dets["closed"]}


def _latex_name(name: str) -> str:
    return re.sub(r"_(\d{2,})", r"_{\1}", name)


def render_table(rows: list[dict], fmt: str) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(TABLE_COLUMNS)
        for r in rows:
            w.writerow([r[c] for c in TABLE_COLUMNS])
    elif fmt == "json":
        _emit_jsonl(rows, buf)
    elif fmt == "latex":
        buf.write("\\begin{tabular}{lcr}\n\\toprule\n")
        buf.write("$(m_1,m_2,n,l)$ & $\\hat{Q}_3(m_1,-m_2,n,\\ell)$ & "
                  "$\\det(\\hat{Q}_3(m_1,-m_2,n,\\ell))$\\\\\n\\midrule\n")
        for r in rows:
            buf.write(f"$({r['m1']},{r['m2']},{r['n']},{r['l']})$ & ${_latex_name(r['name'])}$ & ${r['det']}$\\\\\n")
        buf.write("\\bottomrule\n\\end{tabular}\n")
    else:
        raise ValueError(f"unknown table format {fmt!r}")
    return buf.getvalue()


def _safe_table_row(item):
    try:
        return "ok", table_row(item)
    except RouteDisagreement as exc:
        return "disagree", str(exc)


def cmd_table(args, out, err) -> int:
    try:
        if args.paramfile is None:
            text = data_path("table1.params").read_text()
        elif args.paramfile == "-":
            text = sys.stdin.read()
        else:
            with open(args.paramfile) as fh:
                text = fh.read()
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    items, errors = parse_paramfile(text.splitlines())
    if errors:
        for e in errors:
            err.write(f"error: {e}\n")
        return EXIT_INPUT
    rows = []
    for status, payload in _ordered_map(_safe_table_row, items):
        if status == "disagree":
            err.write(f"internal error: {payload}\n")
            return EXIT_DISAGREE
        rows.append(payload)
    out.write(render_table(rows, args.format))
    return EXIT_OK


# -- verify ---------------------------------------------------------------

def _int_list(text: str, size: int, flag: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"{flag} expects {size} comma-separated integers, got {text!r}") from None
    if len(values) != size:
        raise InputError(f"{flag} expects {size} comma-separated integers, got {text!r}")
    return values


def suite_bounds(name: str, args) -> dict:
    if name == "weaving":
        return {"n_max": args.max}
    if name == "hybrid":
        return {"m_max": args.max, "n_max": args.nmax if args.nmax is not None else args.max}
    if name == "torus":
        return {"q_max": args.max}
    if name == "one-five":
        bounds = {"n_max": args.max}
        if args.l_range:
            bounds["l_range"] = tuple(_int_list(args.l_range, 2, "--l-range"))
        return bounds
    if name == "routes":
        if not args.grid:
            return {}
        m1, m2, n, l = _int_list(args.grid, 4, "--grid")
        return {"m1_max": m1, "m2_max": m2, "n_max": n, "l_abs": l}
    if name == "burau-props":
        return {"count": args.words, "max_length": args.length, "seed": args.seed}
    raise InputError(f"unknown suite {name!r}")


def cmd_verify(args, out, err) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    try:
        plans = [(name, suite_bounds(name, args)) for name in names]
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    status = EXIT_OK
    for name, bounds in plans:
        report = run_suite(name, **bounds)
        summary = report.summary()
        if args.records:
            summary["records"] = [r.as_dict() for r in report.records]
        _emit_jsonl([summary], out)
        for bad in report.violations:
            err.write(f"FAIL {name} {bad.params}: {bad.left} != {bad.right}\n")
        if not report.ok:
            status = EXIT_FAIL
    return status


# -- expand ---------------------------------------------------------------

def cmd_expand(args, out, err) -> int:
    try:
        p = parse_params(args.params)
    except BraidParseError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    w = expand_tghw(p)
    if args.format == "json":
        _emit_jsonl([{"params": p.as_dict(), "word": render_word(w),
                      "letters": letter_count(w), "exponent_sum": exponent_sum(w)}], out)
    else:
        out.write(render_word(w) + "\n")
    return EXIT_OK


# -- entry point ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="braidet", description="Determinants and Alexander polynomials of closed 3-braids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("det", help="determinant, Alexander polynomial and classification")
    p.add_argument("inputs", nargs="*", metavar="INPUT",
                   help="family literal m1,m2,n,l or a braid word such as 's1^3 s2^-1'")
    p.add_argument("--word", action="append", default=[], help="braid word (repeatable)")
    p.add_argument("--route", choices=ROUTES, default="all")
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("table", help="determinant table for a parameter file (default: Table 1)")
    p.add_argument("paramfile", nargs="?", help="one 'm1,m2,n,l [name]' per line; '-' for stdin")
    p.add_argument("--format", choices=("csv", "json", "latex"), default="json")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--max", type=int, default=None, help="main bound of the identity suites")
    p.add_argument("--nmax", type=int, default=None, help="n bound for the hybrid suite")
    p.add_argument("--l-range", default=None, help="lo,hi twist range for one-five")
    p.add_argument("--grid", default=None, help="m1max,m2max,nmax,|l|max for routes")
    p.add_argument("--words", type=int, default=None, help="random word count for burau-props")
    p.add_argument("--length", type=int, default=None, help="max word length for burau-props")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--records", action="store_true", help="list every check, not only failures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", help="expand m1,m2,n,l into a braid word")
    p.add_argument("params")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_expand)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        # det accepts inputs on both sides of its options
        if args.command != "det" or any(x.startswith("--") for x in extra):
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    if args.command == "det":
        args.ordered = _det_inputs_in_order(argv[argv.index("det") + 1:])
    return args.func(args, out, err)


def _det_inputs_in_order(tokens: list[str]) -> list[tuple[str, str]]:
    """(kind, text) for each det input in command-line order."""
    items = []
    it = iter(tokens)
    for tok in it:
        if tok == "--":
            items.extend(("auto", rest) for rest in it)
        elif tok == "--word":
            items.append(("word", next(it, "")))
        elif tok.startswith("--word="):
            items.append(("word", tok[len("--word="):]))
        elif tok in ("--route", "--format"):
            next(it, None)
        elif tok.startswith("-") and not re.match(r"-\d", tok):
            continue
        else:
            items.append(("auto", tok))
    return items


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
