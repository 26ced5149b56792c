"""Command-line interface.

Subcommands: divisors, distance, number, grid, amenable.  Tables are
emitted as CSV (default), JSON (array of flat objects, fixed key order)
or aligned ASCII; the divisors and amenable commands can also render a
planified grid (columns are residues mod the multiplicity).  Exit codes:
0 ok, 2 input error, 3 cross-check disagreement, 4 search-space cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .amenable import enumerate_amenable, shadow_representatives
from .distances import (
    DEFAULT_SUBSET_CAP,
    brute_force_distance,
    feng_rao_distance,
    smallest_asymptotic_base,
)
from .divisors import divisors
from .errors import FengRaoError, SearchSpaceTooLarge
from .interval import (
    as_interval,
    interval_feng_rao_number,
    interval_semigroup,
    rho_equality_predicted,
)
from .semigroup import NumericalSemigroup, from_generators

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_CAP = 4


class _CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------- helpers


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise _CliError(f"cannot parse {what} {text!r} as comma-separated integers")


def _parse_r_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            values = list(range(int(lo), int(hi) + 1))
        else:
            values = [int(text)]
    except ValueError:
        raise _CliError(f"cannot parse r range {text!r}; use N or lo..hi")
    if not values or values[0] < 1:
        raise _CliError(f"r range {text!r} is empty or starts below 1")
    return values


def _semigroup_from_args(args: argparse.Namespace) -> NumericalSemigroup:
    if getattr(args, "interval", None):
        pair = _parse_ints(args.interval, "--interval")
        if len(pair) != 2:
            raise _CliError("--interval needs exactly two integers a,b")
        a, b = pair
        if not 0 < b < a:
            raise _CliError(f"--interval needs 0 < b < a, got a={a}, b={b}")
        return interval_semigroup(a, b)
    if getattr(args, "gens", None):
        return from_generators(_parse_ints(args.gens, "--gens"))
    raise _CliError("one of --gens or --interval is required")


def _resolve_m(sgp: NumericalSemigroup, m_arg: int | None) -> int:
    m0 = smallest_asymptotic_base(sgp)
    if m_arg is None:
        return m0
    if m_arg < m0:
        raise _CliError(
            f"--m {m_arg} is below 2c-1 = {m0}; below that point "
            "delta(m) = m + 1 - 2g + E(S, r) is not guaranteed"
        )
    if not sgp.contains(m_arg):
        raise _CliError(f"--m {m_arg} is not an element of the semigroup")
    return m_arg


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render_table(rows: list[dict], fmt: str) -> str:
    """Rows share the same keys, in insertion order."""
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    headers = list(rows[0].keys()) if rows else []
    cells = [[str(row[h]) for h in headers] for row in rows]
    if fmt == "csv":
        lines = [",".join(headers)] + [",".join(row) for row in cells]
        return "\n".join(lines) + "\n"
    # aligned ascii
    widths = [
        max(len(h), *(len(row[i]) for row in cells)) if cells else len(h)
        for i, h in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render_number_grid(
    sgp: NumericalSemigroup, lo: int, hi: int, marks: dict[int, str]
) -> str:
    """Planified helix: one row per multiple of the multiplicity.

    Each cell is the integer prefixed by its marker; gaps of S print in
    parentheses.
    """
    a = sgp.multiplicity
    width = len(str(hi)) + 2
    lines = []
    for row_start in range((hi // a) * a, (lo // a) * a - 1, -a):
        cells = []
        for n in range(row_start, row_start + a):
            if n < lo or n > hi:
                cells.append(" " * (width + 1))
            elif not sgp.contains(n):
                cells.append(f"({n})".rjust(width + 1))
            else:
                cells.append(marks.get(n, " ") + str(n).rjust(width))
        lines.append("".join(cells).rstrip())
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- commands


def _cmd_divisors(args: argparse.Namespace) -> int:
    sgp = _semigroup_from_args(args)
    dset = divisors(sgp, args.x)
    if args.format == "json":
        payload = {
            "generators": list(sgp.minimal_generators),
            "x": args.x,
            "count": len(dset),
            "divisors": list(dset.elements),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        lines = ["divisor"] + [str(d) for d in dset.elements]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        marks = {d: "*" for d in dset.elements}
        grid = _render_number_grid(sgp, 0, args.x, marks)
        summary = f"{len(dset)} divisors of {args.x} (marked *)\n"
        _emit(grid + summary, args.out)
    return EXIT_OK


def _method_for(sgp: NumericalSemigroup, requested: str) -> str:
    interval = as_interval(sgp)
    if requested == "auto":
        return "interval" if interval else "generic"
    if requested == "interval" and interval is None:
        raise _CliError("--method interval needs interval-shaped generators")
    return requested


def _one_result(
    sgp: NumericalSemigroup, m: int, r: int, method: str, cap: int
) -> tuple[int, int, str]:
    """(delta, e, method-label) for a single (m, r) by the given method."""
    offset = m + 1 - 2 * sgp.genus
    if method == "interval":
        a, b = as_interval(sgp)  # type: ignore[misc]
        e = interval_feng_rao_number(a, b, r)
        return offset + e, e, "interval-formula"
    if method == "brute":
        res = brute_force_distance(sgp, m, r, max_subsets=cap)
        return res.delta, res.e_number, "brute-force"
    res = feng_rao_distance(sgp, m, r)
    return res.delta, res.e_number, "generic"


def _cmd_distance_like(args: argparse.Namespace) -> int:
    sgp = _semigroup_from_args(args)
    m = _resolve_m(sgp, args.m)
    rows: list[dict] = []
    mismatch = False
    for r in _parse_r_range(args.r):
        t0 = time.perf_counter()
        if args.method == "all":
            methods = ["generic", "brute"]
            if as_interval(sgp):
                methods.insert(1, "interval")
            values = {meth: _one_result(sgp, m, r, meth, args.max_brute) for meth in methods}
            agree = len({v[0] for v in values.values()}) == 1
            mismatch = mismatch or not agree
            row: dict = {"r": r, "m": m}
            for meth in ("generic", "interval", "brute"):
                delta, e = values.get(meth, ("-", "-", ""))[:2]
                row[f"delta_{meth}"] = delta
                row[f"e_{meth}"] = e
            row["agree"] = "yes" if agree else "no"
        else:
            method = _method_for(sgp, args.method)
            delta, e, label = _one_result(sgp, m, r, method, args.max_brute)
            row = {"r": r, "m": m, "delta": delta, "e": e, "method": label}
        elapsed = 0.0 if args.no_timing else (time.perf_counter() - t0) * 1000.0
        row["elapsed_ms"] = f"{elapsed:.3f}"
        rows.append(row)
    _emit(_render_table(rows, args.format), args.out)
    return EXIT_MISMATCH if mismatch else EXIT_OK


def _cmd_grid(args: argparse.Namespace) -> int:
    if args.amax < 2 or args.bmax < 1 or args.rmax < 1:
        raise _CliError("grid needs --amax >= 2, --bmax >= 1, --rmax >= 1")
    rows = []
    for a in range(2, args.amax + 1):
        for b in range(1, min(a - 1, args.bmax) + 1):
            sgp = interval_semigroup(a, b)
            for r in range(1, args.rmax + 1):
                e = interval_feng_rao_number(a, b, r)
                rows.append(
                    {
                        "a": a,
                        "b": b,
                        "r": r,
                        "e": e,
                        "rho": sgp.rho(r),
                        "rho_case": "yes" if rho_equality_predicted(a, b, r) else "no",
                    }
                )
    _emit(_render_table(rows, args.format), args.out)
    return EXIT_OK


def _cmd_amenable(args: argparse.Namespace) -> int:
    sgp = _semigroup_from_args(args)
    m = _resolve_m(sgp, args.m)
    r_values = _parse_r_range(args.r)
    if len(r_values) != 1:
        raise _CliError("amenable takes a single --r value")
    source = shadow_representatives if args.representatives else enumerate_amenable
    configs = list(source(sgp, m, r_values[0]))
    if args.format == "ascii":
        width = sgp.largest_generator
        out = []
        for i, config in enumerate(configs):
            marks = {x: "#" if x < m + width else "+" for x in config.elements}
            out.append(f"[{i}] " + " ".join(str(x) for x in config.elements))
            out.append(_render_number_grid(sgp, m, max(config.elements), marks))
        _emit("\n".join(out), args.out)
        return EXIT_OK
    rows = [
        {
            "index": i,
            "count": len(config),
            "elements": " ".join(str(x) for x in config.elements),
        }
        for i, config in enumerate(configs)
    ]
    _emit(_render_table(rows, args.format), args.out)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gens", help="comma-separated generators, e.g. 9,13,15")
    p.add_argument("--interval", help="interval generators a,b for <a..a+b>")
    p.add_argument("--format", choices=["csv", "json", "ascii"], default="csv")
    p.add_argument("--out", help="write output to this file instead of stdout")


def _add_method_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", required=True, help="configuration size N or range lo..hi")
    p.add_argument(
        "--method",
        choices=["auto", "generic", "interval", "brute", "all"],
        default="auto",
    )
    p.add_argument("--m", type=int, default=None, help="base (default 2c-1)")
    p.add_argument("--max-brute", type=int, default=DEFAULT_SUBSET_CAP)
    p.add_argument(
        "--no-timing",
        action="store_true",
        help="report elapsed_ms as 0.000 for byte-stable output",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fengrao",
        description="Divisor sets and Feng-Rao numbers of numerical semigroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divisors", help="divisors of a semigroup element")
    _add_common(p)
    p.add_argument("--x", type=int, required=True)

    p = sub.add_parser("distance", help="r-th Feng-Rao distance at m")
    _add_common(p)
    _add_method_args(p)

    p = sub.add_parser("number", help="r-th Feng-Rao number E(S, r)")
    _add_common(p)
    _add_method_args(p)

    p = sub.add_parser("grid", help="E(r, <a..a+b>) over a parameter grid")
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--bmax", type=int, required=True)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json", "ascii"], default="csv")
    p.add_argument("--out")

    p = sub.add_parser("amenable", help="list amenable sets or shadow representatives")
    _add_common(p)
    p.add_argument("--r", required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--representatives", action="store_true")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "divisors":
            return _cmd_divisors(args)
        if args.command in ("distance", "number"):
            return _cmd_distance_like(args)
        if args.command == "grid":
            return _cmd_grid(args)
        return _cmd_amenable(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SearchSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FengRaoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
