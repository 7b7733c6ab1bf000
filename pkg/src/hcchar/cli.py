"""Command-line interface: single character values, full tables in three
output formats, spin bitrace values, and self-verification suites.

Set HCCHAR_CACHE to a writable directory to persist computed tables as JSON;
cache entries are cross-checked between two methods before being written,
stored atomically, and ignored when unreadable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import bitrace, characters, golden
from .partitions import (
    Parts,
    format_parts,
    is_odd_partition,
    nonzero_length,
    odd_partitions_of,
    parse_parts,
    sort_desc,
    strict_partitions_of,
    weight,
    z_lambda,
)
from .qpoly import NonDivisibleError, QPoly

CACHE_ENV = "HCCHAR_CACHE"
CACHE_VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_IO = 4


# ---------------------------------------------------------------------------
# table cache

def _cache_path(n: int) -> str | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return os.path.join(root, f"chartable_n{n}.json")


def _table_to_payload(n: int, table: dict[tuple[Parts, Parts], QPoly]) -> dict:
    cells = []
    for mu in odd_partitions_of(n):
        for lam in strict_partitions_of(n):
            cells.append(
                {
                    "lambda": list(lam),
                    "mu": list(mu),
                    "poly": table[(lam, mu)].to_json(),
                }
            )
    return {"n": n, "cells": cells, "version": CACHE_VERSION}


def _payload_to_table(payload: dict, n: int) -> dict[tuple[Parts, Parts], QPoly]:
    if payload.get("version") != CACHE_VERSION or payload.get("n") != n:
        raise ValueError("cache schema mismatch")
    table = {}
    for cell in payload["cells"]:
        key = (tuple(cell["lambda"]), tuple(cell["mu"]))
        table[key] = QPoly.from_json(cell["poly"])
    expected = {
        (lam, mu)
        for mu in odd_partitions_of(n)
        for lam in strict_partitions_of(n)
    }
    if set(table) != expected:
        raise ValueError("cache cell set mismatch")
    return table


def load_cached_table(n: int) -> dict[tuple[Parts, Parts], QPoly] | None:
    path = _cache_path(n)
    if path is None or not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as handle:
            payload = json.load(handle)
        return _payload_to_table(payload, n)
    except Exception:
        return None  # corrupt entries are recomputed


def store_cached_table(n: int, table: dict[tuple[Parts, Parts], QPoly]) -> None:
    path = _cache_path(n)
    if path is None:
        return
    payload = _table_to_payload(n, table)
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=".chartable", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(payload, handle)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def table_with_cache(n: int, method: str = "auto") -> dict[tuple[Parts, Parts], QPoly]:
    cached = load_cached_table(n)
    if cached is not None:
        return cached
    table = characters.char_table(n, method=method)
    if _cache_path(n) is not None:
        # cached values must be method-independent
        check = characters.char_table(n, method="recursive")
        if check != table:
            raise NonDivisibleError(f"method disagreement while caching n={n}")
        store_cached_table(n, table)
    return table


# ---------------------------------------------------------------------------
# table rendering

def render_table_json(n: int, table) -> str:
    return json.dumps(_table_to_payload(n, table))


def render_table_csv(n: int, table) -> str:
    lams = strict_partitions_of(n)
    lines = ["mu\\lambda," + ",".join(f'"{format_parts(lam)}"' for lam in lams)]
    for mu in odd_partitions_of(n):
        cells = ['"' + format_parts(mu) + '"']
        cells.extend('"' + table[(lam, mu)].to_text() + '"' for lam in lams)
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def render_table_latex(n: int, table) -> str:
    lams = strict_partitions_of(n)
    cols = "|" + "c|" * (len(lams) + 1)
    out = ["\\begin{tabular}{" + cols + "}", "\\hline"]
    header = ["$\\mu\\backslash\\lambda$"] + [
        "$(" + ",".join(map(str, lam)) + ")$" for lam in lams
    ]
    out.append(" & ".join(header) + " \\\\")
    out.append("\\hline")
    for mu in odd_partitions_of(n):
        row = ["$(" + ",".join(map(str, mu)) + ")$"]
        row.extend("$" + table[(lam, mu)].to_text() + "$" for lam in lams)
        out.append(" & ".join(row) + " \\\\")
        out.append("\\hline")
    out.append("\\end{tabular}")
    return "\n".join(out) + "\n"


TABLE_RENDERERS = {
    "json": render_table_json,
    "csv": render_table_csv,
    "latex": render_table_latex,
}


# ---------------------------------------------------------------------------
# verification suites

def _suite_tables(n_max: int):
    for n in range(3, min(n_max, 7) + 1):
        computed = characters.char_table(n, method="auto")
        expected = golden.golden_table(n)
        ok = computed == expected
        yield f"table n={n} matches the published table ({len(expected)} cells)", ok


def _suite_cross(n_max: int):
    for n in range(1, n_max + 1):
        ok = True
        for mu in odd_partitions_of(n):
            for lam in strict_partitions_of(n):
                values = {
                    name: fn(lam, mu) for name, fn in characters.METHODS.items()
                }
                if len(set(values.values())) != 1:
                    ok = False
        yield f"five-way method agreement, n={n}", ok
        ok_closed = True
        for mu in odd_partitions_of(n):
            base = characters.char_combinatorial((n,), mu)
            if characters.char_one_row(mu) != base:
                ok_closed = False
            for k in range(n // 2 + 1, n):
                if characters.char_two_row(k, mu) != characters.char_combinatorial(
                    (k, n - k), mu
                ):
                    ok_closed = False
        for lam in strict_partitions_of(n):
            if characters.char_column(lam) != characters.char_combinatorial(
                lam, (1,) * n
            ):
                ok_closed = False
            for k in range(1, n + 1, 2):
                mu = (k,) + (1,) * (n - k)
                if characters.char_hook_mu(lam, k) != characters.char_combinatorial(
                    lam, mu
                ):
                    ok_closed = False
        yield f"closed forms agree on their domains, n={n}", ok_closed


def _suite_symmetry(n_max: int):
    for n in range(1, n_max + 1):
        ok = True
        for mu in odd_partitions_of(n):
            bound = n - nonzero_length(mu)
            for lam in strict_partitions_of(n):
                value = characters.char_value(lam, mu)
                if not value.is_palindromic() or value.degree > bound:
                    ok = False
        yield f"palindromic coefficients and degree bound, n={n}", ok


def _suite_ortho(n_max: int):
    for n in range(1, min(n_max, 7) + 1):
        ok = True
        for mu in odd_partitions_of(n):
            for nu in odd_partitions_of(n):
                lhs = characters.orthogonality_sum(mu, nu)
                mid = bitrace.sbtr(mu, nu)
                rhs = bitrace.sbtr_matrix(mu, nu)
                if not (lhs == mid == rhs):
                    ok = False
                at_one = lhs.eval_at(1)
                expected = 2 ** nonzero_length(mu) * z_lambda(mu) if mu == nu else 0
                if at_one != expected:
                    ok = False
            if bitrace.regular_char(mu) != bitrace.sbtr(mu, (1,) * n):
                ok = False
        yield f"bitrace orthogonality and regular character, n={n}", ok


VERIFY_SUITES = {
    "tables": _suite_tables,
    "cross": _suite_cross,
    "symmetry": _suite_symmetry,
    "ortho": _suite_ortho,
}


def run_verify(n_max: int, suite: str, out=None) -> int:
    out = out if out is not None else sys.stdout
    names = list(VERIFY_SUITES) if suite == "all" else [suite]
    all_ok = True
    for name in names:
        for description, ok in VERIFY_SUITES[name](n_max):
            print(("PASS" if ok else "FAIL") + f" [{name}] {description}", file=out)
            all_ok = all_ok and ok
    print("verify: " + ("all checks passed" if all_ok else "FAILURES detected"), file=out)
    return EXIT_OK if all_ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# subcommands

def _cmd_char(args) -> int:
    lam = parse_parts(args.lam)
    mu = parse_parts(args.mu)
    cached = None
    if args.method == "auto" and is_odd_partition(sort_desc(mu)):
        table = load_cached_table(weight(lam))
        if table is not None:
            cached = table.get((tuple(lam), sort_desc(mu)))
    value = cached if cached is not None else characters.char_value(lam, mu, args.method)
    print(value.to_text())
    return EXIT_OK


def _cmd_table(args) -> int:
    table = table_with_cache(args.n, method=args.method)
    rendered = TABLE_RENDERERS[args.format](args.n, table)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(rendered)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(rendered)
    return EXIT_OK


def _cmd_sbtr(args) -> int:
    mu = parse_parts(args.mu)
    nu = parse_parts(args.nu)
    value = bitrace.sbtr(mu, nu)
    if args.at_q is not None:
        print(value.eval_at(Fraction(args.at_q)))
    else:
        print(value.to_text())
    return EXIT_OK


def _cmd_verify(args) -> int:
    return run_verify(args.n_max, args.suite)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hcchar",
        description="Exact Hecke-Clifford character values and spin bitraces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", help="one character value")
    p_char.add_argument("--lambda", dest="lam", required=True, help="strict partition, e.g. 4,2")
    p_char.add_argument("--mu", required=True, help="partition, e.g. 3,3")
    p_char.add_argument(
        "--method",
        default="auto",
        choices=["auto", "oracle", "recursive", "pfaffian", "combinatorial", "pieri"],
    )
    p_char.set_defaults(func=_cmd_char)

    p_table = sub.add_parser("table", help="full character table for weight n")
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--format", default="json", choices=["json", "csv", "latex"])
    p_table.add_argument("--out", default=None, help="output path (default stdout)")
    p_table.add_argument(
        "--method",
        default="auto",
        choices=["auto", "oracle", "recursive", "pfaffian", "combinatorial", "pieri"],
    )
    p_table.set_defaults(func=_cmd_table)

    p_sbtr = sub.add_parser("sbtr", help="spin bitrace of two classes")
    p_sbtr.add_argument("--mu", required=True)
    p_sbtr.add_argument("--nu", required=True)
    p_sbtr.add_argument("--at-q", dest="at_q", default=None, help="evaluate at a rational q")
    p_sbtr.set_defaults(func=_cmd_sbtr)

    p_verify = sub.add_parser("verify", help="run self-verification suites")
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=7)
    p_verify.add_argument(
        "--suite", default="all", choices=["tables", "cross", "symmetry", "ortho", "all"]
    )
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonDivisibleError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
