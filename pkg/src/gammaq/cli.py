"""Command-line front end.

Subcommands: lkostka, spin-green, spin-char, expand, verify.
Formats: json (canonical), csv, latex (published table layout), markdown.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .cache import Cache
from .partitions import Partition, check_strict, parse_partition, partition_str
from .qkostka import expand_g_in_q, l_table
from .spingreen import spin_char_table, y_table
from .tpoly import ONE, TPoly
from .verify import SUITES, run_suite
from .vertexops import qhl, schur_q

FORMATS = ("json", "csv", "latex", "markdown")


# -------------------------------------------------------------- rendering


def _poly_latex(p: TPoly) -> str:
    out = str(p)
    for k in range(p.degree, 1, -1):
        out = out.replace(f"t^{k}", f"t^{{{k}}}")
    return out


def _part_compact(p: Partition) -> str:
    """Grouped display form: (3,1,1,1) -> (3,1^3)."""
    if not p:
        return "()"
    pieces = []
    i = 0
    while i < len(p):
        j = i
        while j < len(p) and p[j] == p[i]:
            j += 1
        pieces.append(str(p[i]) if j - i == 1 else f"{p[i]}^{j - i}")
        i = j
    return "(" + ",".join(pieces) + ")"


def _matrix_csv(corner: str, cols, rows, cell) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([corner] + [partition_str(c) for c in cols])
    for r in rows:
        writer.writerow([partition_str(r)] + [cell(r, c) for c in cols])
    return buf.getvalue()


def _matrix_markdown(corner: str, cols, rows, cell) -> str:
    header = [corner] + [_part_compact(c) for c in cols]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(" --- " for _ in header) + "|",
    ]
    for r in rows:
        lines.append(
            "| " + " | ".join([_part_compact(r)] + [cell(r, c) for c in cols]) + " |"
        )
    return "\n".join(lines) + "\n"


def _matrix_latex(corner: str, cols, rows, cell) -> str:
    colspec = "|" + "c|" * (len(cols) + 1)
    lines = [
        "\\begin{tabular}{" + colspec + "}",
        "\\hline",
        " & ".join([corner] + [f"${_part_compact(c)}$" for c in cols]) + " \\\\",
        "\\hline",
    ]
    for r in rows:
        lines.append(
            " & ".join([f"${_part_compact(r)}$"] + [f"${cell(r, c)}$" for c in cols])
            + " \\\\"
        )
        lines.append("\\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _render_poly_table(table, fmt: str, latex_transposed: bool) -> str:
    rows, cols = table.rows(), table.cols()
    if fmt == "json":
        return json.dumps(table.to_json(), indent=2) + "\n"
    if fmt == "csv":
        return _matrix_csv(
            "lambda\\mu", cols, rows, lambda r, c: str(table.entry(r, c))
        )
    if fmt == "markdown":
        return _matrix_markdown(
            "lambda\\mu", cols, rows, lambda r, c: str(table.entry(r, c))
        )
    if fmt == "latex":
        if latex_transposed:
            # published layout: rows are the odd shapes, columns the strict ones
            return _matrix_latex(
                "$\\mu\\backslash\\lambda$",
                rows,
                cols,
                lambda mu, lam: _poly_latex(table.entry(lam, mu)),
            )
        return _matrix_latex(
            "$\\lambda\\backslash\\mu$",
            cols,
            rows,
            lambda lam, mu: _poly_latex(table.entry(lam, mu)),
        )
    raise ValueError(f"unknown format {fmt}")


def _render_int_table(table, fmt: str) -> str:
    rows, cols = table.rows(), table.cols()
    if fmt == "json":
        return json.dumps(table.to_json(), indent=2) + "\n"
    cell = lambda r, c: str(table.entry(r, c))
    if fmt == "csv":
        return _matrix_csv("lambda\\mu", cols, rows, cell)
    if fmt == "markdown":
        return _matrix_markdown("lambda\\mu", cols, rows, cell)
    if fmt == "latex":
        return _matrix_latex(
            "$\\mu\\backslash\\lambda$",
            rows,
            cols,
            lambda mu, lam: str(table.entry(lam, mu)),
        )
    raise ValueError(f"unknown format {fmt}")


def _coeff_prefix(c: TPoly) -> str:
    """Coefficient as a multiplier: '' for 1, inline monomial, else parenthesized."""
    if c == ONE:
        return ""
    text = _poly_latex(c)
    nonzero = [k for k in range(c.degree + 1) if c.coefficient(k)]
    if len(nonzero) == 1 and c.leading_coefficient > 0:
        return text
    return f"({text})"


def _render_expansion(family: str, lam: Partition, basis: str, terms, fmt: str) -> str:
    ordered = sorted(terms.items(), reverse=True)
    if fmt == "json":
        payload = {
            "family": family,
            "lambda": list(lam),
            "basis": basis,
            "terms": [
                {"partition": list(p), "coeff": c.to_json()} for p, c in ordered
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition", "coeff"])
        for p, c in ordered:
            writer.writerow([partition_str(p), str(c)])
        return buf.getvalue()
    if fmt == "markdown":
        lines = ["| partition | coefficient |", "| --- | --- |"]
        lines += [f"| {_part_compact(p)} | {c} |" for p, c in ordered]
        return "\n".join(lines) + "\n"
    if fmt == "latex":
        symbol = {"Q": "Q", "p": "p"}[basis]
        body = " + ".join(
            f"{_coeff_prefix(c)}{symbol}_{{{_part_compact(p)}}}"
            for p, c in reversed(ordered)  # diagonal term first, as published
        )
        if not body:
            body = "0"
        return f"${family}_{{{_part_compact(lam)}}} = {body}$\n"
    raise ValueError(f"unknown format {fmt}")


# ------------------------------------------------------------------ emit


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _make_cache(args) -> Cache:
    return Cache(directory=args.cache_dir, enabled=not args.no_cache)


# ------------------------------------------------------------- commands


def cmd_lkostka(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    cache = _make_cache(args)
    cache.load()
    table = l_table(args.n, jobs=args.jobs)
    cache.save()
    _emit(_render_poly_table(table, args.format, latex_transposed=False), args.out)
    return 0


def cmd_spin_green(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    cache = _make_cache(args)
    cache.load()
    table = y_table(args.n, jobs=args.jobs)
    cache.save()
    _emit(_render_poly_table(table, args.format, latex_transposed=True), args.out)
    return 0


def cmd_spin_char(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    cache = _make_cache(args)
    cache.load()
    table = spin_char_table(args.n, jobs=args.jobs)
    cache.save()
    _emit(_render_int_table(table, args.format), args.out)
    return 0


def cmd_expand(args) -> int:
    lam = check_strict(parse_partition(args.lam))
    cache = _make_cache(args)
    cache.load()
    if args.basis == "Q":
        if args.family == "G":
            terms = expand_g_in_q(lam).entries
        else:
            terms = {lam: ONE}
    else:
        element = qhl(lam) if args.family == "G" else schur_q(lam)
        terms = dict(element.terms())
    cache.save()
    _emit(_render_expansion(args.family, lam, args.basis, terms, args.format), args.out)
    return 0


def cmd_verify(args) -> int:
    if args.max_n < 1:
        raise ValueError("--max-n must be >= 1")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cache = _make_cache(args)
    cache.load()
    lines = []
    any_fatal = False
    for name in names:
        results, elapsed = run_suite(name, args.max_n)
        passed = sum(1 for r in results if r.passed)
        failed = sum(1 for r in results if r.fatal)
        flagged = sum(1 for r in results if r.diagnostic and not r.passed)
        any_fatal = any_fatal or failed > 0
        lines.append(
            f"suite {name}: {len(results)} checks, {passed} passed, "
            f"{failed} failed, {flagged} diagnostics flagged ({elapsed:.2f}s)"
        )
        for r in results:
            tag = "DIAG" if r.diagnostic else ("PASS" if r.passed else "FAIL")
            lines.append(f"  [{tag}] {r.name}: {r.detail}")
    cache.save()
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if any_fatal else 0


# -------------------------------------------------------------- parser


def _add_common(sub, jobs: bool = True) -> None:
    sub.add_argument("--format", choices=FORMATS, default="json")
    sub.add_argument("--out", metavar="PATH", default=None)
    sub.add_argument("--cache-dir", metavar="PATH", default=None)
    sub.add_argument("--no-cache", action="store_true")
    if jobs:
        sub.add_argument("--jobs", type=int, default=1, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammaq",
        description=(
            "Exact tables of Q-Kostka polynomials, spin Green polynomials and "
            "spin characters of the symmetric group."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("lkostka", help="Q-Kostka matrix over strict partitions")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_lkostka)

    p = subs.add_parser("spin-green", help="spin Green polynomial table")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_spin_green)

    p = subs.add_parser("spin-char", help="spin character table")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=cmd_spin_char)

    p = subs.add_parser("expand", help="expand a basis vector in another basis")
    p.add_argument("--family", choices=("G", "Q"), required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.add_argument("--basis", choices=("Q", "p"), required=True)
    _add_common(p, jobs=False)
    p.set_defaults(func=cmd_expand)

    p = subs.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        choices=("all",) + tuple(SUITES),
        default="all",
    )
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    _add_common(p, jobs=False)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
