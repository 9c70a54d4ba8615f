"""Command line: ``seq``, ``verify`` and ``report``.

Counterexamples and mismatches are findings, not failures; the exit status
is non-zero only for bad arguments or I/O errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import UnknownPresetError
from .exact_arith import render_scalar, to_json
from .horadam import PRESETS, HoradamParams, preset, term_fast
from .report import build_report, report_json, report_markdown, run_suites
from .sequences import cw_term
from .spinor import spinor_term

KINDS = ("scalar", "cartan", "spinor")
FORMATS = ("json", "csv", "markdown")
SUITE_CHOICES = ("binet", "identities", "genfunc", "all", "none")


class CliError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise CliError(f"invalid range {text!r}; expected FROM..TO") from None
    if lo < 0 or lo >= hi:
        raise CliError(f"invalid range {text!r}; need 0 <= FROM < TO")
    return lo, hi


def resolve_params(args) -> HoradamParams:
    custom = (args.p, args.q, args.a, args.b)
    if args.preset == "custom":
        if any(v is None for v in custom):
            raise CliError("--preset custom requires --p, --q, --a and --b")
        return HoradamParams(*custom)
    if args.preset is None:
        raise CliError("--preset is required")
    try:
        return preset(args.preset)
    except UnknownPresetError as exc:
        raise CliError(exc.args[0]) from None


# --- seq --------------------------------------------------------------------


def _row(kind, params, n):
    if kind == "scalar":
        return term_fast(params, n)
    if kind == "cartan":
        return cw_term(params, n)
    return spinor_term(params, n)


def _flat_columns(kind):
    if kind == "scalar":
        return ["value"]
    if kind == "cartan":
        return ["s", "i", "j", "k"]
    return ["c1_re", "c1_im", "c2_re", "c2_im"]


def _flat_values(kind, term):
    if kind == "scalar":
        return [render_scalar(term)]
    if kind == "cartan":
        return [render_scalar(c) for c in term.coords()]
    return [render_scalar(v) for v in (term.c1.re, term.c1.im, term.c2.re, term.c2.im)]


def render_seq(kind: str, params: HoradamParams, lo: int, hi: int, fmt: str) -> str:
    terms = [(n, _row(kind, params, n)) for n in range(lo, hi)]
    if fmt == "json":
        return json.dumps([to_json(t) for _, t in terms]) + "\n"
    header = ["n"] + _flat_columns(kind)
    rows = [[str(n)] + _flat_values(kind, t) for n, t in terms]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


# --- verify -----------------------------------------------------------------


def render_verify(summary: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(summary, indent=2) + "\n"
    header = ["suite", "name", "preset", "status"]
    rows = [[r["suite"], r["name"], r["preset"], r["status"]] for r in summary["results"]]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    lines = [
        f"total: {summary['total']}, verified: {summary['verified']}, "
        f"counterexamples: {len(summary['counterexamples'])}",
        "",
        "| " + " | ".join(header) + " |",
        "|" + "---|" * len(header),
    ]
    lines += ["| " + " | ".join(c.replace("|", "\\|") for c in r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


# --- report -----------------------------------------------------------------


def render_report(fmt: str) -> str:
    doc = build_report()
    if fmt == "markdown":
        return report_markdown(doc)
    if fmt == "json":
        return report_json(doc)
    raise CliError("report supports --format json or markdown")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cartan-horadam", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format):
        p.add_argument("--format", choices=FORMATS, default=default_format)
        p.add_argument("--out", help="write output here instead of stdout")

    seq = sub.add_parser("seq", help="list sequence terms")
    seq.add_argument("--preset", help=f"one of {', '.join(PRESETS)} or 'custom'")
    for name in ("p", "q", "a", "b"):
        seq.add_argument(f"--{name}", type=int)
    seq.add_argument("--kind", choices=KINDS, default="scalar")
    seq.add_argument("--range", default="0..10", help="half-open FROM..TO")
    common(seq, "json")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", choices=SUITE_CHOICES, default="all")
    common(verify, "json")

    report = sub.add_parser("report", help="reconcile printed constants against computed values")
    common(report, "markdown")
    return parser


def _emit(text: str, out):
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "seq":
            params = resolve_params(args)
            lo, hi = parse_range(args.range)
            text = render_seq(args.kind, params, lo, hi, args.format)
        elif args.command == "verify":
            text = render_verify(run_suites(args.suite), args.format)
        else:
            text = render_report(args.format)
        _emit(text, args.out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
