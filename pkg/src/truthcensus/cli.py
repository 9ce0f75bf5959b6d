"""Command-line front end for the truth-table census toolkit.

Exit codes: 0 on success (and on verified checks), 1 when a verification
check fails, 2 on usage errors.  All machine formats emit counts as strings
so values beyond 64 bits survive JSON round-trips.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import fruitful_tree as ft
from . import power_series as ps
from .asymptotics import (
    asymptotic_profile,
    check_probability_dominance,
    constant_y,
    constant_y_fraction,
    ratio_table,
)
from .formula_oracle import (
    CONNECTIVE_COLUMN,
    Census,
    Connective,
    census,
    check_case_ii_uniformity,
    tables_csv,
)
from .sequences import COLUMN_NAMES, SequenceTable, is_power_of_two, partition_row

CONNECTIVE_BY_FLAG = {
    "implies": Connective.IMPLIES,
    "case-i": Connective.CASE_I,
    "case-ii": Connective.CASE_II,
    "case-iii": Connective.CASE_III,
}


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _rows_to_plain(header: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [len(h) for h in header]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _parse_ns(text: str) -> list[int]:
    """Parse an index list like '1..10,100' into [1, ..., 10, 100]."""
    out: list[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ".." in chunk:
            lo_text, hi_text = chunk.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError(f"empty range {chunk!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(chunk))
    if not out:
        raise ValueError(f"no indices in {text!r}")
    return out


# ---------------------------------------------------------------- seq


def cmd_seq(args: argparse.Namespace) -> int:
    names = [c.strip() for c in args.columns.split(",") if c.strip()]
    for name in names:
        if name not in COLUMN_NAMES:
            raise ValueError(f"unknown column {name!r}; choose from {','.join(COLUMN_NAMES)}")
    table = SequenceTable(args.max_n)
    columns = {name: table.column(name) for name in names}

    if args.format == "json":
        payload: dict = {"max_n": args.max_n, "n": list(range(args.max_n + 1))}
        for name in names:
            payload[name] = [str(v) for v in columns[name]]
        _emit(args, json.dumps(payload, indent=2))
        return 0

    header = ["n"] + names
    rows = [[n] + [columns[name][n] for name in names] for n in range(args.max_n + 1)]
    if args.format == "csv":
        _emit(args, _rows_to_csv(header, rows))
    else:
        _emit(args, _rows_to_plain(header, rows))
    return 0


# ---------------------------------------------------------------- oracle


def _census_payload(result: Census, expected: int) -> dict:
    return {
        "n": result.n,
        "connective": result.connective.name.lower().replace("_", "-"),
        "false_total": str(result.false_total),
        "true_total": str(result.true_total),
        "rows_total": str(result.rows_total),
        "expected_false": str(expected),
        "match": result.false_total == expected,
    }


def cmd_oracle(args: argparse.Namespace) -> int:
    connective = CONNECTIVE_BY_FLAG[args.connective]
    result = census(args.n, connective, method=args.method, jobs=args.jobs)
    column = CONNECTIVE_COLUMN[connective]
    expected = SequenceTable(args.n).value(column, args.n)
    payload = _census_payload(result, expected)

    table_text = tables_csv(args.n, connective) if args.tables else None

    if args.format == "json":
        if table_text is not None:
            payload["tables_csv"] = table_text
        _emit(args, json.dumps(payload, indent=2))
    elif args.format == "csv":
        if table_text is not None:
            _emit(args, table_text)
        else:
            header = list(payload)
            _emit(args, _rows_to_csv(header, [[payload[k] for k in header]]))
    else:
        lines = [f"{key}: {value}" for key, value in payload.items()]
        if table_text is not None:
            lines += ["", table_text.rstrip("\n")]
        _emit(args, "\n".join(lines))
    return 0 if payload["match"] else 1


# ---------------------------------------------------------------- series


def cmd_series(args: argparse.Namespace) -> int:
    which = args.which.lower()
    series = ps.expand_y(args.order) if which == "y" else ps.expand_g(args.order)
    if args.format == "json":
        payload = {"which": which} | series.to_json_dict()
        _emit(args, json.dumps(payload, indent=2))
        return 0
    header = ["n", "coefficient"]
    rows = [[n, str(c)] for n, c in enumerate(series.coeffs)]
    if args.format == "csv":
        _emit(args, _rows_to_csv(header, rows))
    else:
        _emit(args, _rows_to_plain(header, rows))
    return 0


# ---------------------------------------------------------------- ratio


def cmd_ratio(args: argparse.Namespace) -> int:
    ns = _parse_ns(args.ns)
    rows = ratio_table(ns, digits=args.digits)
    limit = constant_y(args.digits)
    if args.format == "json":
        payload = {
            "digits": args.digits,
            "limit": limit,
            "rows": [
                {"n": r.n, "y": str(r.y), "g": str(r.g), "ratio": r.ratio} for r in rows
            ],
        }
        _emit(args, json.dumps(payload, indent=2))
        return 0
    header = ["n", "y_n", "g_n", "ratio"]
    cells = [[r.n, r.y, r.g, r.ratio] for r in rows]
    if args.format == "csv":
        _emit(args, _rows_to_csv(header, cells))
    else:
        text = _rows_to_plain(header, cells)
        text += f"limit: {limit}\n"
        _emit(args, text)
    return 0


# ---------------------------------------------------------------- parity


def cmd_parity(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise ValueError(f"--max-n must be >= 1, got {args.max_n}")
    table = SequenceTable(args.max_n)
    cats = table.column("catalan")
    ys = table.column("y")
    ds = table.column("d")
    ays = table.column("a_y")
    ads = table.column("a_d")

    header = ["n", "power_of_two", "catalan_odd", "y_odd", "d_odd",
              "a_y_odd", "a_d_odd", "pattern_ok"]
    rows = []
    all_ok = True
    for n in range(1, args.max_n + 1):
        pow2 = is_power_of_two(n)
        ok = (cats[n] % 2 == 1) == pow2 and (ys[n] % 2 == 1) == pow2 and (ds[n] % 2 == 1) == pow2
        if n >= 2:
            ok = ok and (ays[n] % 2 == 1) == (n % 2 == 1) and (ads[n] % 2 == 1) == (n % 2 == 1)
        all_ok = all_ok and ok
        rows.append([
            n, int(pow2), cats[n] % 2, ys[n] % 2, ds[n] % 2,
            ays[n] % 2 if n >= 2 else "", ads[n] % 2 if n >= 2 else "", int(ok),
        ])

    if args.format == "json":
        payload = {
            "max_n": args.max_n,
            "all_ok": all_ok,
            "rows": [dict(zip(header, row)) for row in rows],
        }
        _emit(args, json.dumps(payload, indent=2))
    elif args.format == "csv":
        _emit(args, _rows_to_csv(header, rows))
    else:
        _emit(args, _rows_to_plain(header, rows))
    return 0 if all_ok else 1


# ---------------------------------------------------------------- tree


def cmd_tree(args: argparse.Namespace) -> int:
    kind = ft.FruitKind.Y if args.kind == "y" else ft.FruitKind.D
    tree = ft.build_fruitful_tree(args.n, kind)
    if args.format == "dot":
        _emit(args, ft.to_dot(tree))
    elif args.format == "json":
        _emit(args, ft.to_json(tree))
    else:
        header = ["split", "sub_branches", "fruits"]
        rows = [[b.split, b.sub_branch_count, b.fruit_total] for b in tree.branches]
        text = _rows_to_plain(header, rows)
        text += f"components: {tree.component_count()}\n"
        _emit(args, text)
    return 0


# ---------------------------------------------------------------- report


def cmd_report(args: argparse.Namespace) -> int:
    from .report import generate_report

    paths = generate_report(args.out_dir, max_n=args.max_n, digits=args.digits)
    _emit(args, "\n".join(str(p) for p in paths))
    return 0


# ---------------------------------------------------------------- verify


class _Verifier:
    def __init__(self):
        self.failures = 0

    def check(self, ok: bool, label: str) -> None:
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
        if not ok:
            self.failures += 1


def cmd_verify(args: argparse.Namespace) -> int:
    v = _Verifier()
    table = SequenceTable(max(args.max_n, args.parity_n, args.oracle_n))
    reference = {name: list(table.column(name)) for name in ("catalan", "f", "s", "h", "y", "d", "g")}
    if args.inject_fault:
        # Testing aid: corrupt one reference value so a healthy oracle must disagree.
        reference["y"][5] += 1

    for connective, column in CONNECTIVE_COLUMN.items():
        ok = all(
            census(n, connective).false_total == reference[column][n]
            for n in range(1, args.oracle_n + 1)
        )
        v.check(ok, f"oracle census equals {column} recurrence (n=1..{args.oracle_n}, "
                    f"{connective.name.lower().replace('_', '-')})")

    ok = all(
        census(n, c, method="table").false_total == census(n, c, method="product").false_total
        for n in range(1, args.table_n + 1)
        for c in Connective
    )
    v.check(ok, f"full-table census equals product rule (n=1..{args.table_n}, all connectives)")

    v.check(
        all(check_case_ii_uniformity(n) for n in range(1, args.uniformity_n + 1)),
        f"case-ii tables identical across bracketings (n=1..{args.uniformity_n})",
    )

    series_y = ps.expand_y(args.series_order)
    ok = series_y.is_integral() and [int(c) for c in series_y.coeffs] == reference["y"][: args.series_order + 1]
    v.check(ok, f"series coefficients integral and equal to y recurrence (order {args.series_order})")

    series_g = ps.expand_g(args.series_order)
    ok = series_g.is_integral() and [int(c) for c in series_g.coeffs] == reference["g"][: args.series_order + 1]
    v.check(ok, f"series coefficients equal to g column (order {args.series_order})")

    v.check(ps.check_functional_equation(args.series_order).is_zero(),
            f"functional-equation residual is the zero series (order {args.series_order})")
    v.check(ps.check_quadratic_equation(args.series_order).is_zero(),
            f"quadratic-equation residual is the zero series (order {args.series_order})")

    ys, ds, cats = reference["y"], reference["d"], reference["catalan"]
    ok = all(
        ((ys[n] % 2 == 1) == is_power_of_two(n))
        and ((ds[n] % 2 == 1) == is_power_of_two(n))
        and ((cats[n] % 2 == 1) == is_power_of_two(n))
        for n in range(1, args.parity_n + 1)
    )
    v.check(ok, f"y, d, catalan odd exactly at powers of two (n=1..{args.parity_n})")

    component_columns = {
        ft.FruitKind.Y: table.column("a_y"),
        ft.FruitKind.D: table.column("a_d"),
    }
    ok = all(
        ft.build_fruitful_tree(n, kind).component_count() == column[n]
        for kind, column in component_columns.items()
        for n in range(2, args.max_n + 1)
    )
    v.check(ok, f"component counts match closed form (n=2..{args.max_n}, both kinds)")

    ok = all(
        (column[n] % 2 == 1) == (n % 2 == 1)
        for column in component_columns.values()
        for n in range(2, args.max_n + 1)
    )
    v.check(ok, f"component counts odd exactly at odd n (n=2..{args.max_n})")

    ok = True
    for n in range(2, args.max_n + 1):
        row = partition_row(n)
        ok = ok and sum(row) == reference["y"][n] and row == row[::-1]
    v.check(ok, f"partition rows palindromic and summing to y (n=2..{args.max_n})")

    v.check(check_probability_dominance(args.max_n),
            f"false-row dominance y_n >= f_n (n=1..{args.max_n})")

    limit = constant_y_fraction()
    mid, top = max(args.max_n // 4, 1), args.max_n
    if top > mid:
        err_mid = abs(Fraction(reference["y"][mid], reference["g"][mid]) - limit)
        err_top = abs(Fraction(reference["y"][top], reference["g"][top]) - limit)
        v.check(err_top < err_mid,
                f"density error shrinks toward the limit (n={mid} vs n={top})")

    profile = asymptotic_profile(digits=12)
    aligned = Fraction(profile.constant_y) + Fraction(profile.constant_d) == 1
    v.check(aligned, "y and d limit constants sum to 1 after rounding alignment (12 digits)")

    if v.failures:
        print(f"FAILED: {v.failures} failing check(s)")
        return 1
    print("OK: all checks passed")
    return 0


# ---------------------------------------------------------------- parser


def _add_common(sub: argparse.ArgumentParser, formats: tuple[str, ...], default: str = "plain") -> None:
    sub.add_argument("--format", choices=formats, default=default,
                     help=f"output format (default {default})")
    sub.add_argument("--output", help="write to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="truthcensus",
        description="Exact census of true/false rows in truth tables of bracketed connective chains.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    sub = subparsers.add_parser("seq", help="print census sequence columns")
    sub.add_argument("--max-n", type=int, default=100)
    sub.add_argument("--columns", default=",".join(COLUMN_NAMES),
                     help=f"comma-separated subset of {','.join(COLUMN_NAMES)}")
    _add_common(sub, ("plain", "csv", "json"))
    sub.set_defaults(handler=cmd_seq)

    sub = subparsers.add_parser("oracle", help="brute-force census versus the recurrence")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--connective", choices=sorted(CONNECTIVE_BY_FLAG), default="case-i")
    sub.add_argument("--method", choices=("product", "table"), default="product")
    sub.add_argument("--tables", action="store_true",
                     help="also emit the per-bracketing truth tables as CSV")
    sub.add_argument("--jobs", type=int, default=1,
                     help="parallel workers for the product-rule census")
    _add_common(sub, ("plain", "csv", "json"))
    sub.set_defaults(handler=cmd_oracle)

    sub = subparsers.add_parser("series", help="expand the exact generating series")
    sub.add_argument("--which", choices=("y", "g", "Y", "G"), default="y")
    sub.add_argument("--order", type=int, default=200)
    _add_common(sub, ("plain", "csv", "json"))
    sub.set_defaults(handler=cmd_series)

    sub = subparsers.add_parser("ratio", help="exact false-row densities y_n/g_n")
    sub.add_argument("--ns", default="1..10,100", help="index list, e.g. 1..10,100")
    sub.add_argument("--digits", type=int, default=11)
    _add_common(sub, ("plain", "csv", "json"))
    sub.set_defaults(handler=cmd_ratio)

    sub = subparsers.add_parser("parity", help="parity patterns of the census columns")
    sub.add_argument("--max-n", type=int, default=128)
    _add_common(sub, ("plain", "csv", "json"))
    sub.set_defaults(handler=cmd_parity)

    sub = subparsers.add_parser("tree", help="decorated component-count tree export")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--kind", choices=("y", "d"), default="y")
    _add_common(sub, ("plain", "json", "dot"))
    sub.set_defaults(handler=cmd_tree)

    sub = subparsers.add_parser("verify", help="run the full cross-verification suite")
    sub.add_argument("--oracle-n", type=int, default=8)
    sub.add_argument("--table-n", type=int, default=6)
    sub.add_argument("--uniformity-n", type=int, default=8)
    sub.add_argument("--series-order", type=int, default=100)
    sub.add_argument("--parity-n", type=int, default=1024)
    sub.add_argument("--max-n", type=int, default=200)
    sub.add_argument("--inject-fault", action="store_true",
                     help="testing aid: corrupt one reference value to prove checks can fail")
    sub.set_defaults(handler=cmd_verify)

    sub = subparsers.add_parser("report", help="write CSV tables and figures to a directory")
    sub.add_argument("--out-dir", required=True)
    sub.add_argument("--max-n", type=int, default=60)
    sub.add_argument("--digits", type=int, default=11)
    sub.add_argument("--output", help="write the path listing here instead of stdout")
    sub.set_defaults(handler=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, KeyError, IndexError) as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
        return 2  # unreachable; keeps type checkers content


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
