"""Command-line front end: count k-trees, print tables, run verifications.

Subcommands
    count   U coefficients for one k
    table   grid of counts for k = 1..max_k, optionally with the stable row
    stable  the k-independent tail values
    verify  consistency suites against embedded reference data, the closed
            forms, the brute-force oracle, and the structural identities

Counts are indexed by the number of hedra n; a k-tree with n hedra has
n + k vertices.  For cross-reference, the rows k = 1..5 and the stable row
correspond to OEIS A000055, A054581, A078792, A078793, A201702 and A224917
(each offset by the n -> n+k vertex shift).  The reference grid below is
embedded so every check runs offline and byte-for-byte reproducibly.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
integrality violation (an engine bug, never bad input).
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import permutations
from math import factorial
from typing import Callable, Sequence, TextIO

from .closedforms import fourtree_U, otter_U, threetree_U, twotree_U, twotree_rooted_series
from .engine import count_ktrees, solve_system, stable_counts
from .oracle import MAX_K, MAX_N, fixed_count, orbit_count
from .series import IntegralityError, integer_coeffs

# Reference values: number of k-trees with n hedra, k = 1..5 and n = 0..9,
# plus the stable tail (the common value of all rows with k >= n-1).
REFERENCE_COUNTS: dict[int, list[int]] = {
    1: [1, 1, 1, 2, 3, 6, 11, 23, 47, 106],
    2: [1, 1, 1, 2, 5, 12, 39, 136, 529, 2171],
    3: [1, 1, 1, 2, 5, 15, 58, 275, 1505, 9003],
    4: [1, 1, 1, 2, 5, 15, 64, 331, 2150, 15817],
    5: [1, 1, 1, 2, 5, 15, 64, 342, 2321, 18578],
}
STABLE_ROW: list[int] = [1, 1, 1, 2, 5, 15, 64, 342, 2344, 19137]

VERIFY_MODES = ("reference", "closedform", "oracle", "dissymmetry", "stability", "all")

# One verification check: (name, passed, detail-for-failures)
Check = tuple[str, bool, str]


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


# ---------------------------------------------------------------- output


def _print_counts(k: int | str, counts: list[int], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        out.write(",".join(str(c) for c in counts) + "\n")
    elif fmt == "json":
        out.write(json.dumps({"k": k, "counts": counts}) + "\n")
    else:
        out.write(" ".join(str(c) for c in counts) + "\n")


def _print_table(rows: list[tuple[int | str, list[int]]], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        for _, counts in rows:
            out.write(",".join(str(c) for c in counts) + "\n")
        return
    if fmt == "json":
        out.write(json.dumps([{"k": k, "counts": counts} for k, counts in rows]) + "\n")
        return
    n_cols = len(rows[0][1])
    labels = [str(k) for k, _ in rows]
    label_width = max(len("k\\n"), max(len(s) for s in labels))
    col_widths = [
        max(len(str(n)), max(len(str(counts[n])) for _, counts in rows))
        for n in range(n_cols)
    ]
    header = "k\\n".ljust(label_width) + "".join(
        f"  {str(n).rjust(col_widths[n])}" for n in range(n_cols)
    )
    out.write(header + "\n")
    for label, counts in zip(labels, (counts for _, counts in rows)):
        out.write(
            label.ljust(label_width)
            + "".join(f"  {str(c).rjust(col_widths[n])}" for n, c in enumerate(counts))
            + "\n"
        )


# ---------------------------------------------------------------- commands


def _cmd_count(args: argparse.Namespace, out: TextIO) -> int:
    counts = count_ktrees(args.k, args.terms - 1).U
    _print_counts(args.k, counts, args.format, out)
    return 0


def _cmd_table(args: argparse.Namespace, out: TextIO) -> int:
    rows: list[tuple[int | str, list[int]]] = [
        (k, count_ktrees(k, args.max_n).U) for k in range(1, args.max_k + 1)
    ]
    if args.stable:
        rows.append(("stable", stable_counts(args.max_n)))
    _print_table(rows, args.format, out)
    return 0


def _cmd_stable(args: argparse.Namespace, out: TextIO) -> int:
    counts = stable_counts(args.terms - 1)
    _print_counts("stable", counts, args.format, out)
    return 0


# ---------------------------------------------------------------- verify


def _verify_reference() -> list[Check]:
    checks: list[Check] = []
    cells_ok = 0
    for k, expected in REFERENCE_COUNTS.items():
        got = count_ktrees(k, 9).U
        matches = sum(1 for a, b in zip(got, expected) if a == b)
        cells_ok += matches
        checks.append(
            (f"reference: row k={k} matches embedded table ({matches}/10 cells)",
             got == expected,
             f"got {got}")
        )
    got_stable = stable_counts(9)
    matches = sum(1 for a, b in zip(got_stable, STABLE_ROW) if a == b)
    cells_ok += matches
    checks.append(
        (f"reference: stable row matches embedded table ({matches}/10 cells)",
         got_stable == STABLE_ROW,
         f"got {got_stable}")
    )
    checks.append(
        (f"reference: {cells_ok}/60 grid cells match", cells_ok == 60, "")
    )
    return checks


def _verify_closedform(order: int = 30) -> list[Check]:
    checks: list[Check] = []
    for name, fn, k in (
        ("1-tree formula", otter_U, 1),
        ("2-tree formula", twotree_U, 2),
        ("3-tree formula", threetree_U, 3),
        ("4-tree formula", fourtree_U, 4),
    ):
        closed = integer_coeffs(fn(order))
        eng = count_ktrees(k, order).U
        checks.append(
            (f"closedform: {name} == engine through order {order}",
             closed == eng,
             f"first difference at n={next((i for i, (a, b) in enumerate(zip(closed, eng)) if a != b), -1)}")
        )
    d, s = twotree_rooted_series(order)
    cache = solve_system(2, order)
    checks.append(
        (f"closedform: 2-tree rooted pair == engine per-type series through order {order}",
         d == cache.c_table[(1, 1)] and s == cache.c_table[(2,)],
         "")
    )
    return checks


def _verify_oracle() -> list[Check]:
    checks: list[Check] = []
    for k in range(1, MAX_K + 1):
        engine_u = count_ktrees(k, MAX_N).U
        perms = list(permutations(range(1, k + 2)))
        orbit_ok = True
        burnside_ok = True
        detail = ""
        for n in range(MAX_N + 1):
            orbits = orbit_count(k, n)
            if orbits != engine_u[n]:
                orbit_ok = False
                detail = f"n={n}: oracle {orbits} vs engine {engine_u[n]}"
            fixed_total = sum(fixed_count(k, n, pi) for pi in perms)
            if fixed_total != orbits * factorial(k + 1):
                burnside_ok = False
                detail = f"n={n}: sum fix = {fixed_total}, orbits = {orbits}"
        checks.append(
            (f"oracle: orbit counts == engine for k={k}, n<={MAX_N}", orbit_ok, detail)
        )
        checks.append(
            (f"oracle: Burnside identity for k={k}, n<={MAX_N}", burnside_ok, detail)
        )
    return checks


def _verify_dissymmetry(max_k: int = 6, order: int = 40) -> list[Check]:
    checks: list[Check] = []
    for k in range(1, max_k + 1):
        try:
            bundle = count_ktrees(k, order)  # raises if any series non-integral
        except IntegralityError as exc:
            checks.append((f"dissymmetry: U = B + C - E for k={k}, N={order}", False, str(exc)))
            continue
        ok = all(
            bundle.U[n] == bundle.B[n] + bundle.C[n] - bundle.E[n] and bundle.U[n] >= 0
            for n in range(order + 1)
        )
        checks.append((f"dissymmetry: U = B + C - E for k={k}, N={order}", ok, ""))
    return checks


def _verify_stability(max_k: int = 14, max_n: int = 12) -> list[Check]:
    checks: list[Check] = []
    u = {k: count_ktrees(k, max_n).U for k in range(1, max_k + 1)}
    stable_ok = True
    detail = ""
    for n in range(max_n + 1):
        for k in range(max(n - 1, 2), max_k + 1):
            if u[k][n] != u[k - 1][n]:
                stable_ok = False
                detail = f"n={n}, k={k}: {u[k][n]} != {u[k - 1][n]}"
    checks.append(
        (f"stability: counts constant for k >= n-1 (n<={max_n}, k<={max_k})", stable_ok, detail)
    )
    diff_ok = True
    detail = ""
    for n in range(4, max_n + 1):
        lhs = u[n - 2][n] - u[n - 3][n]
        rhs = u[1][n - 1]
        if lhs != rhs:
            diff_ok = False
            detail = f"n={n}: {lhs} != {rhs}"
    checks.append(
        (f"stability: last jump equals tree count (4<=n<={max_n})", diff_ok, detail)
    )
    return checks


_SUITES: dict[str, Callable[[], list[Check]]] = {
    "reference": _verify_reference,
    "closedform": _verify_closedform,
    "oracle": _verify_oracle,
    "dissymmetry": _verify_dissymmetry,
    "stability": _verify_stability,
}


def _cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    modes = list(_SUITES) if args.mode == "all" else [args.mode]
    failures = 0
    for mode in modes:
        for name, passed, detail in _SUITES[mode]():
            if passed:
                out.write(f"PASS {name}\n")
            else:
                failures += 1
                out.write(f"FAIL {name}" + (f" [{detail}]" if detail else "") + "\n")
    out.write(f"{'OK' if failures == 0 else 'FAILED'}: {failures} failing check(s)\n")
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------- parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktrees",
        description="Exact counts of unlabeled k-trees by number of hedra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print counts for one k")
    p_count.add_argument("--k", type=_positive_int, required=True, help="k-tree parameter")
    p_count.add_argument("--terms", type=_positive_int, default=10,
                         help="number of coefficients (n = 0..terms-1)")
    p_count.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p_count.set_defaults(func=_cmd_count)

    p_table = sub.add_parser("table", help="print the counts grid for k = 1..max-k")
    p_table.add_argument("--max-k", type=_positive_int, required=True)
    p_table.add_argument("--max-n", type=_nonnegative_int, required=True)
    p_table.add_argument("--stable", action="store_true", help="append the stable row")
    p_table.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p_table.set_defaults(func=_cmd_table)

    p_stable = sub.add_parser("stable", help="print the k-independent tail values")
    p_stable.add_argument("--terms", type=_positive_int, default=10)
    p_stable.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    p_stable.set_defaults(func=_cmd_stable)

    p_verify = sub.add_parser("verify", help="run consistency suites")
    p_verify.add_argument("--mode", choices=VERIFY_MODES, default="all")
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except IntegralityError as exc:
        print(f"internal error: non-integer count ({exc})", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
