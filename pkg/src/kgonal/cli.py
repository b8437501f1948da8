"""Command-line surface: counts, tables, growth constants, verification.

Output contract: exact counts are printed as decimal strings inside
JSON or CSV, never as floats, so arbitrarily large values round-trip.
Identical invocations produce bit-identical output; nothing in the
output depends on timing or cache state.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from mpmath import mp, nstr

from kgonal.asymptotics import (
    NonConvergenceError,
    constants,
    empirical_amplitude,
    solve_xi,
)
from kgonal.bseries import BTable, GonalParams, compute_b, recurrence_crosscheck
from kgonal.cache import resolve_cache_dir
from kgonal.even import edge_rooted_counts, even_series, symmetric_system
from kgonal.labelled import (
    burnside_b,
    labelled_oriented,
    labelled_rooted,
    labelled_unoriented,
)
from kgonal.odd import (
    odd_edge_rooted_counts,
    odd_recurrence,
    odd_series,
    odd_symmetric_series,
)
from kgonal.oracle import count_tau_fixed, enumerate_b
from kgonal.oriented import oriented_series
from kgonal.series import Series
from kgonal.universal import universal_c, xi_from_expansion

__all__ = ["main", "family_counts", "render_table", "read_bfile", "FAMILIES"]

FAMILIES = (
    "b",
    "labelled-rooted",
    "labelled-oriented",
    "labelled",
    "unlabelled-oriented",
    "unlabelled",
    "edge-rooted-unlabelled",
)

EMPIRICAL_ORDER = 1000


class CliError(Exception):
    """User-facing failure: message goes to standard error, exit is nonzero."""


def family_counts(
    k: int, family: str, order: int, cache_dir: Path | None = None
) -> list[int]:
    """Counts for n = 0..order of one family at one polygon size."""
    if order < 0:
        raise CliError("order must be >= 0")
    try:
        params = GonalParams(k)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if family in ("labelled-rooted", "labelled-oriented", "labelled"):
        fn = {
            "labelled-rooted": labelled_rooted,
            "labelled-oriented": labelled_oriented,
            "labelled": labelled_unoriented,
        }[family]
        return [fn(params, n) for n in range(order + 1)]
    table = compute_b(params, order, cache_dir)
    if family == "b":
        return list(table.int_coeffs(1))
    if family == "unlabelled-oriented":
        series = oriented_series(params, order, table)
    elif family == "unlabelled":
        if params.k % 2:
            series = odd_series(params, order, table)
        else:
            series = even_series(params, order, table)
    elif family == "edge-rooted-unlabelled":
        if params.k % 2:
            series = odd_edge_rooted_counts(params, order, table)
        else:
            series = edge_rooted_counts(params, order, table)
    else:
        raise CliError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return [int(series[n]) for n in range(order + 1)]


def _count_document(k: int, family: str, entries: list[tuple[int, int]]) -> str:
    doc = {
        "k": k,
        "family": family,
        "counts": [{"n": n, "value": str(v)} for n, v in entries],
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_count(args: argparse.Namespace, cache_dir: Path | None) -> int:
    if (args.n is None) == (args.order is None):
        raise CliError("provide exactly one of --n or --order")
    order = args.n if args.order is None else args.order
    values = family_counts(args.k, args.family, order, cache_dir)
    if args.n is not None:
        entries = [(args.n, values[args.n])]
    else:
        entries = list(enumerate(values))
    sys.stdout.write(_count_document(args.k, args.family, entries))
    return 0


def cmd_series(args: argparse.Namespace, cache_dir: Path | None) -> int:
    values = family_counts(args.k, args.family, args.order, cache_dir)
    sys.stdout.write(_count_document(args.k, args.family, list(enumerate(values))))
    return 0


def unlabelled_column(
    params: GonalParams, order: int, table: BTable | None = None
) -> Series:
    if params.k % 2:
        return odd_series(params, order, table)
    return even_series(params, order, table)


def render_table(
    k_min: int, k_max: int, order: int, fmt: str = "csv", cache_dir: Path | None = None
) -> str:
    """The unlabelled-count matrix, one column per polygon size."""
    if not 2 <= k_min <= k_max:
        raise CliError("need 2 <= k-min <= k-max")
    columns: dict[int, list[int]] = {}
    for k in range(k_min, k_max + 1):
        params = GonalParams(k)
        table = compute_b(params, order, cache_dir)
        series = unlabelled_column(params, order, table)
        columns[k] = [int(series[n]) for n in range(order + 1)]
    if fmt == "csv":
        lines = ["n," + ",".join(f"k{k}" for k in range(k_min, k_max + 1))]
        for n in range(order + 1):
            lines.append(
                str(n) + "," + ",".join(str(columns[k][n]) for k in range(k_min, k_max + 1))
            )
        return "\n".join(lines) + "\n"
    doc = {
        "k_min": k_min,
        "k_max": k_max,
        "order": order,
        "columns": [f"k{k}" for k in range(k_min, k_max + 1)],
        "rows": [
            {
                "n": n,
                "values": [str(columns[k][n]) for k in range(k_min, k_max + 1)],
            }
            for n in range(order + 1)
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def cmd_table(args: argparse.Namespace, cache_dir: Path | None) -> int:
    sys.stdout.write(
        render_table(args.k_min, args.k_max, args.order, args.format, cache_dir)
    )
    return 0


def constants_report(
    p: int,
    series_order: int,
    tol: float,
    with_empirical: bool,
    cache_dir: Path | None = None,
) -> dict:
    """The full constant report for one p, as a JSON-ready dict."""
    params = GonalParams(p + 1)
    table = compute_b(params, series_order, cache_dir)
    xi, iterations, residual = solve_xi(params, table, tol)
    empirical = None
    if with_empirical:
        probe_order = max(series_order, EMPIRICAL_ORDER)
        probe_table = (
            table
            if table.order >= probe_order
            else compute_b(params, probe_order, cache_dir)
        )
        oriented = oriented_series(params, probe_order, probe_table)
        # the square-root singularity puts n^{-5/2} in front of the
        # unrooted-type counts at every page size
        empirical = empirical_amplitude(
            [int(c) for c in oriented.coeffs],
            xi,
            2.5,
            n_probe=probe_order,
        )
    report = constants(
        params,
        table,
        xi,
        iterations,
        residual,
        tol=tol,
        alpha_bar_empirical=empirical,
    )
    return report.to_dict()


def cmd_constants(args: argparse.Namespace, cache_dir: Path | None) -> int:
    if args.p < 1:
        raise CliError("p must be >= 1")
    try:
        doc = constants_report(
            args.p, args.series_order, args.tol, not args.no_empirical, cache_dir
        )
    except NonConvergenceError as exc:
        raise CliError(f"constant solve failed: {exc}") from None
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def cmd_universal(args: argparse.Namespace, cache_dir: Path | None) -> int:
    if args.m_max < 1:
        raise CliError("m-max must be >= 1")
    entries = []
    with mp.workdps(40):
        for m in range(1, args.m_max + 1):
            c = universal_c(m)
            entries.append(
                {
                    "m": m,
                    "closed_form": c.closed_form(),
                    "value": nstr(c.value(40), 20, strip_zeros=False),
                }
            )
    doc: dict = {"m_max": args.m_max, "constants": entries}
    if args.p is not None:
        if args.p < 1:
            raise CliError("p must be >= 1")
        doc["p"] = args.p
        doc["xi_partial_sum"] = xi_from_expansion(args.p, args.m_max)
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def packaged_golden_table() -> str:
    return (resources.files("kgonal") / "data" / "unlabelled_golden.csv").read_text()


def read_bfile(path: Path) -> dict[int, int]:
    """Parse 'index value' lines; '#' starts a comment; blanks ignored."""
    out: dict[int, int] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        index_text, value_text = line.split()
        out[int(index_text)] = int(value_text)
    return out


def _verify_checks(level: str, with_oracle: bool, cache_dir: Path | None):
    """Yield (name, callable) pairs; each callable raises on failure."""
    wide = level == "full"

    def check_recurrence():
        k_max, order = (8, 12) if wide else (6, 10)
        for k in range(2, k_max + 1):
            params = GonalParams(k)
            table = compute_b(params, order, cache_dir)
            alt = recurrence_crosscheck(params, order)
            assert table.int_coeffs(1) == [int(c) for c in alt.coeffs], f"k={k}"

    def check_burnside():
        k_max, n_max = (8, 10) if wide else (6, 8)
        for k in range(2, k_max + 1):
            params = GonalParams(k)
            table = compute_b(params, n_max, cache_dir)
            for n in range(n_max + 1):
                assert burnside_b(params, n) == table.coeff(1, n), f"k={k} n={n}"

    def check_odd_routes():
        ks, order = ((3, 5, 7, 9, 11), 20) if wide else ((3, 5, 7), 12)
        for k in ks:
            params = GonalParams(k)
            table = compute_b(params, order, cache_dir)
            a = odd_series(params, order, table)
            alt = odd_recurrence(params, order, table)
            assert a.coeffs == alt.coeffs, f"k={k}"

    def check_group_average():
        k_max, order = (12, 14) if wide else (8, 12)
        for k in range(2, k_max + 1):
            params = GonalParams(k)
            table = compute_b(params, order, cache_dir)
            a = unlabelled_column(params, order, table)
            a_o = oriented_series(params, order, table)
            for n in range(order + 1):
                assert a[n].denominator == 1 and a[n] >= 0, f"k={k} n={n}"
                assert 2 * a[n] - a_o[n] >= 0, f"k={k} n={n}"

    def check_golden_table():
        assert render_table(2, 12, 20, "csv", cache_dir) == packaged_golden_table()

    def check_oracle():
        n_max = 6 if wide else 5
        for k in (3, 4, 5, 6):
            params = GonalParams(k)
            table = compute_b(params, n_max, cache_dir)
            if params.k % 2:
                sym = odd_symmetric_series(params, n_max, table)
                fixed_expected = [int(sym[n]) for n in range(n_max + 1)]
            else:
                fixed_expected = list(
                    symmetric_system(params, n_max, table).alpha[: n_max + 1]
                )
            for n in range(n_max + 1):
                assert len(enumerate_b(params, n)) == table.coeff(1, n), f"k={k} n={n}"
                assert count_tau_fixed(params, n) == fixed_expected[n], f"k={k} n={n}"

    yield "kernel-vs-tuple-recurrence", check_recurrence
    yield "burnside-vs-kernel", check_burnside
    yield "odd-series-vs-recurrence", check_odd_routes
    yield "group-average-bounds", check_group_average
    yield "golden-table", check_golden_table
    if wide or with_oracle:
        yield "exhaustive-oracle", check_oracle


def cmd_verify(args: argparse.Namespace, cache_dir: Path | None) -> int:
    failures = []
    for name, check in _verify_checks(args.level, args.oracle, cache_dir):
        try:
            check()
        except Exception as exc:  # noqa: BLE001 - report and continue
            failures.append((name, exc))
            sys.stdout.write(f"FAIL {name}: {exc}\n")
        else:
            sys.stdout.write(f"PASS {name}\n")
    if failures:
        sys.stdout.write(f"{len(failures)} check(s) failed\n")
        return 1
    sys.stdout.write("all checks passed\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgonal",
        description="Exact and asymptotic enumeration of polygonal cactus-like complexes.",
    )
    parser.add_argument(
        "--cache-dir",
        default=None,
        help="series cache directory (default: KGONAL_CACHE environment variable, else no cache)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="counts of one family at one polygon size")
    count.add_argument("--k", type=int, required=True)
    count.add_argument("--family", choices=FAMILIES, required=True)
    count.add_argument("--n", type=int, default=None, help="single index to report")
    count.add_argument("--order", type=int, default=None, help="report all of n = 0..order")
    count.set_defaults(handler=cmd_count)

    series = sub.add_parser("series", help="full count prefix of one family")
    series.add_argument("--k", type=int, required=True)
    series.add_argument("--family", choices=FAMILIES, required=True)
    series.add_argument("--order", type=int, required=True)
    series.set_defaults(handler=cmd_series)

    table = sub.add_parser("table", help="unlabelled-count matrix over a range of polygon sizes")
    table.add_argument("--k-min", type=int, default=2)
    table.add_argument("--k-max", type=int, default=12)
    table.add_argument("--order", type=int, default=20)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    table.set_defaults(handler=cmd_table)

    consts = sub.add_parser("constants", help="growth constants at one page size")
    consts.add_argument("--p", type=int, required=True, help="pages per new polygon (k - 1)")
    consts.add_argument("--series-order", type=int, default=500)
    consts.add_argument("--tol", type=float, default=1e-13)
    consts.add_argument(
        "--no-empirical",
        action="store_true",
        help="skip the empirical extrapolation candidate",
    )
    consts.set_defaults(handler=cmd_constants)

    universal = sub.add_parser("universal", help="size-independent expansion coefficients")
    universal.add_argument("--m-max", type=int, default=5)
    universal.add_argument(
        "--p", type=int, default=None, help="also report the partial sum at this p"
    )
    universal.set_defaults(handler=cmd_universal)

    verify = sub.add_parser("verify", help="cross-method identity suite")
    verify.add_argument("--level", choices=("quick", "full"), default="quick")
    verify.add_argument(
        "--oracle",
        action="store_true",
        help="include the exhaustive enumerator sweep at the quick level",
    )
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = resolve_cache_dir(args.cache_dir)
    try:
        return args.handler(args, cache_dir)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
