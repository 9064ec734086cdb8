"""Command-line front end: ``divgraph <command> ...``.

Exit codes: 0 success, 1 computation or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from divgraph import measures as ms
from divgraph.errors import DivGraphError, DomainError
from divgraph.numtheory import build_sieve, divisor_count, factorize, gcd, lcm
from divgraph.oracle import (
    ORACLE_CAP,
    build_oracle,
    oracle_betweenness,
    oracle_degree,
    oracle_distances,
    oracle_neighbor_edges,
    oracle_nonedge_pairs,
)

VERIFY_SCHEDULE = (4, 10, 20, 50, 100, 200, 300)
FIGURE_DEFAULT_N = {"2a": 10**4, "2b": 10**4, "2c": 10**4, "3": 5000}
BETWEENNESS_TOL = 1e-9


@dataclass(frozen=True)
class OutputConfig:
    format: str = "csv"
    destination: str | None = None
    precision: int = 12
    normalized_betweenness: bool = False

    def __post_init__(self) -> None:
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")
        if not 1 <= self.precision <= 17:
            raise ValueError(f"precision must lie in [1, 17], got {self.precision}")


def _ratio(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}" if r.denominator != 1 else str(r.numerator)


class _Row(dict):
    """Ordered row that remembers which columns are real-valued."""

    def __init__(self) -> None:
        super().__init__()
        self.decimals: set[str] = set()

    def add_ratio(self, name: str, r: Fraction) -> None:
        self[name] = _ratio(r)
        self.add_decimal(f"{name}_decimal", float(r))

    def add_decimal(self, name: str, x: float) -> None:
        self[name] = x
        self.decimals.add(name)


def render(rows: Sequence[_Row], cfg: OutputConfig, columns: Sequence[str] | None = None) -> str:
    if columns is None:
        columns = list(rows[0]) if rows else []
    p = cfg.precision

    def cell(row: _Row, key: str, for_json: bool) -> Any:
        v = row.get(key)
        if key in row.decimals:
            return float(f"{v:.{p}f}") if for_json else f"{v:.{p}f}"
        if for_json or v is None:
            return v
        if isinstance(v, bool):
            return "true" if v else "false"
        return v

    if cfg.format == "json":
        records = [{k: cell(r, k, True) for k in columns} for r in rows]
        return json.dumps(records, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow(["" if cell(r, k, False) is None else cell(r, k, False) for k in columns])
    return buf.getvalue()


def emit(text: str, cfg: OutputConfig) -> None:
    if cfg.destination in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(cfg.destination, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def parse_range(text: str, N: int) -> tuple[int, int]:
    """``a..b`` inclusive or a single vertex ``a``; ``None`` means ``1..N``."""
    if text is None:
        return 1, N
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad vertex range {text!r}; use a..b or a") from None


def parse_sweep(text: str) -> list[int]:
    """``start:stop:factor`` geometric sweep, inclusive of stop when hit."""
    try:
        start, stop, factor = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sweep {text!r}; use start:stop:factor") from None
    if start < 2 or stop < start or factor < 2:
        raise argparse.ArgumentTypeError("sweep needs 2 <= start <= stop and factor >= 2")
    out = []
    n = start
    while n <= stop:
        out.append(n)
        n *= factor
    return out


def measure_rows(records: Sequence[ms.MeasureRecord], selection: set[str], N: int, normalized: bool) -> list[_Row]:
    rows = []
    with_errors = any(r.error for r in records)
    for rec in records:
        row = _Row()
        row["n"] = rec.n
        for name in ms.MEASURE_NAMES:
            if name not in selection:
                continue
            if name == "degree":
                row["degree"] = rec.k
            elif name == "neighbor_edges":
                row["neighbor_edges"] = rec.e
            elif name == "nonedge_pairs":
                row["nonedge_pairs"] = rec.nonedge
            elif name in ("clustering", "mean_geodesic"):
                val = rec.c if name == "clustering" else rec.l
                if val is None:
                    row[name] = None
                    row[f"{name}_decimal"] = None
                else:
                    row.add_ratio(name, val)
            elif name == "betweenness":
                key = "betweenness_normalized" if normalized else "betweenness"
                if rec.x is None:
                    row[key] = None
                else:
                    x = rec.x / ((N - 1) * (N - 2)) if normalized and N > 2 else rec.x
                    row.add_decimal(key, x)
        if with_errors:
            row["error"] = rec.error
        rows.append(row)
    return rows


def cmd_measure(args: argparse.Namespace, cfg: OutputConfig) -> int:
    spec = ms.GraphSpec(args.n_max)
    lo, hi = parse_range(args.vertices, args.n_max)
    selection = set(args.measures)
    if "all" in selection:
        selection = set(ms.MEASURE_NAMES)
    budget = None if args.allow_large_betweenness else ms.DEFAULT_PAIR_BUDGET
    records = ms.measure_table(spec, lo, hi, selection, build_sieve(args.n_max), budget=budget)
    emit(render(measure_rows(records, selection, args.n_max, cfg.normalized_betweenness), cfg), cfg)
    return 0


def scan_rows(records: Sequence[ms.DeltaCRecord]) -> list[_Row]:
    rows = []
    for rec in records:
        row = _Row()
        row["n"] = rec.n
        row.add_ratio("delta", rec.delta)
        row["same_floor_band"] = rec.same_floor_band
        row["same_s"] = rec.same_s
        row["divisor_sum_offset"] = rec.divisor_sum_offset
        rows.append(row)
    return rows


def cmd_scan_dc(args: argparse.Namespace, cfg: OutputConfig) -> int:
    N = args.n_max
    if N < 3:
        raise DomainError("scan-dc needs N >= 3")
    records = ms.delta_clustering_scan(ms.GraphSpec(N), 1, N - 1, build_sieve(N))
    emit(render(scan_rows(records), cfg), cfg)
    zeros = [r for r in records if r.delta == 0]
    explained = sum(r.zero_condition for r in zeros)
    offsets = ms.offset_distribution(records)
    hist = " ".join(f"{k}:{v}" for k, v in sorted(offsets.items()))
    print(
        f"# rows={len(records)} zero={len(zeros)} zero_with_conditions={explained} "
        f"zero_without_conditions={len(zeros) - explained}",
        file=sys.stderr,
    )
    print(f"# divisor_sum_offset histogram (same_s rows): {hist}", file=sys.stderr)
    return 0


def connectance_rows(sizes: Sequence[int]) -> list[_Row]:
    rows = []
    for N in sizes:
        spec = ms.GraphSpec(N)
        exact = ms.connectance_exact(spec)
        approx = ms.connectance_asymptotic(spec)
        row = _Row()
        row["N"] = N
        row.add_ratio("exact", exact)
        row.add_decimal("asymptotic", approx)
        row.add_decimal("relative_error", abs(approx - float(exact)) / float(exact))
        rows.append(row)
    return rows


def cmd_connectance(args: argparse.Namespace, cfg: OutputConfig) -> int:
    if args.sweep:
        sizes = args.sweep
    elif args.n_max is not None:
        sizes = [args.n_max]
    else:
        raise argparse.ArgumentTypeError("connectance needs --n-max or --sweep")
    emit(render(connectance_rows(sizes), cfg), cfg)
    return 0


def cmd_gst(args: argparse.Namespace, cfg: OutputConfig) -> int:
    N, s, t = args.n_max, args.s, args.t
    spec = ms.GraphSpec(N)
    sieve = build_sieve(N)
    total = ms.geodesic_path_count(s, t, spec, sieve)
    d = gcd(s, t)
    row = _Row()
    row.update(
        N=N,
        s=s,
        t=t,
        gcd=d,
        lcm=lcm(s, t),
        divisor_term=divisor_count(factorize(d, sieve)),
        multiple_term=N // lcm(s, t),
        total=total,
    )
    emit(render([row], cfg), cfg)
    return 0


def verify(cap: int) -> tuple[list[_Row], list[tuple]]:
    """Compare every analytic measure with the oracle for each scheduled N."""
    sizes = sorted({n for n in VERIFY_SCHEDULE if n <= cap} | {cap})
    rows: list[_Row] = []
    failures: list[tuple] = []
    names = ("degree", "neighbor_edges", "clustering", "mean_geodesic", "nonedge_pairs", "betweenness")
    for N in sizes:
        spec = ms.GraphSpec(N)
        sieve = build_sieve(N)
        g = build_oracle(N)
        counts = {name: [0, 0] for name in names}
        for n in range(1, N + 1):
            k = oracle_degree(g, n)
            e = oracle_neighbor_edges(g, n)
            dist = oracle_distances(g, n)
            expected = {
                "degree": k,
                "neighbor_edges": e,
                "clustering": Fraction(e, k * (k - 1) // 2) if k >= 2 else Fraction(0),
                "mean_geodesic": Fraction(sum(dist), N),
                "nonedge_pairs": oracle_nonedge_pairs(g, n),
                "betweenness": oracle_betweenness(g, n),
            }
            got = {
                "degree": ms.degree(n, spec, sieve),
                "neighbor_edges": ms.neighbor_edge_count(n, spec, sieve),
                "clustering": ms.clustering(n, spec, sieve),
                "mean_geodesic": ms.mean_geodesic(n, spec, sieve),
                "nonedge_pairs": ms.nonedge_neighbor_pairs(n, spec, sieve),
                "betweenness": ms.betweenness(n, spec, sieve, budget=None),
            }
            for name in names:
                if name == "betweenness":
                    ok = abs(got[name] - expected[name]) <= BETWEENNESS_TOL
                else:
                    ok = got[name] == expected[name]
                counts[name][0 if ok else 1] += 1
                if not ok:
                    failures.append((N, n, name, got[name], expected[name]))
        for name in names:
            row = _Row()
            row.update(N=N, measure=name, passed=counts[name][0], failed=counts[name][1])
            rows.append(row)
    return rows, failures


def cmd_verify(args: argparse.Namespace, cfg: OutputConfig) -> int:
    cap = args.n_max
    if not 2 <= cap <= ORACLE_CAP:
        raise DomainError(f"verify cap must lie in [2, {ORACLE_CAP}], got {cap}")
    rows, failures = verify(cap)
    emit(render(rows, cfg), cfg)
    if failures:
        print(f"{len(failures)} mismatches; first {min(10, len(failures))}:", file=sys.stderr)
        for N, n, name, got, want in failures[:10]:
            print(f"  N={N} n={n} {name}: analytic={got} oracle={want}", file=sys.stderr)
        return 1
    return 0


def figure_rows(which: str, N: int) -> list[_Row]:
    spec = ms.GraphSpec(N)
    sieve = build_sieve(N)
    rows = []
    if which == "3":
        for rec in ms.delta_clustering_scan(spec, 1, N - 1, sieve):
            row = _Row()
            row["n"] = rec.n
            row.add_decimal("delta_c", float(rec.delta))
            rows.append(row)
        return rows
    for n in range(1, N + 1):
        row = _Row()
        row["n"] = n
        if which == "2a":
            row["divisor_count"] = divisor_count(factorize(n, sieve))
        elif which == "2b":
            row["multiples"] = N // n
        else:
            row["degree"] = ms.degree(n, spec, sieve)
        rows.append(row)
    return rows


def cmd_figure(args: argparse.Namespace, cfg: OutputConfig) -> int:
    N = args.n_max if args.n_max is not None else FIGURE_DEFAULT_N[args.which]
    if args.which == "3" and N < 3:
        raise DomainError("figure 3 needs N >= 3")
    emit(render(figure_rows(args.which, N), cfg), cfg)
    return 0


def _precision(text: str) -> int:
    p = int(text)
    if not 1 <= p <= 17:
        raise argparse.ArgumentTypeError("precision must lie in [1, 17]")
    return p


def _size(text: str) -> int:
    n = int(text)
    if n < 2:
        raise argparse.ArgumentTypeError("N must be at least 2")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--precision", type=_precision, default=12, help="decimal places for reals")
    common.add_argument("--normalized", action="store_true", help="emit x_n / ((N-1)(N-2))")

    parser = argparse.ArgumentParser(prog="divgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", parents=[common], help="per-vertex measure table")
    p.add_argument("--n-max", type=_size, required=True)
    p.add_argument("--vertices", default=None, help="a..b or a (default 1..N)")
    p.add_argument(
        "--measures",
        type=lambda s: s.split(","),
        default=["degree"],
        help=f"comma list from {','.join(ms.MEASURE_NAMES)} or 'all'",
    )
    p.add_argument("--allow-large-betweenness", action="store_true")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("scan-dc", parents=[common], help="consecutive clustering differences")
    p.add_argument("--n-max", type=_size, required=True)
    p.set_defaults(func=cmd_scan_dc)

    p = sub.add_parser("connectance", parents=[common], help="exact vs asymptotic connectance")
    p.add_argument("--n-max", type=_size, default=None)
    p.add_argument("--sweep", type=parse_sweep, default=None, help="start:stop:factor")
    p.set_defaults(func=cmd_connectance)

    p = sub.add_parser("gst", parents=[common], help="geodesic path count of a non-adjacent pair")
    p.add_argument("--n-max", type=_size, required=True)
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_gst)

    p = sub.add_parser("verify", parents=[common], help="analytic vs brute-force oracle")
    p.add_argument("--n-max", type=_size, default=100)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", parents=[common], help="plot-ready data for figures 2a-2c, 3")
    p.add_argument("which", choices=tuple(FIGURE_DEFAULT_N))
    p.add_argument("--n-max", type=_size, default=None)
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = OutputConfig(args.format, args.out, args.precision, args.normalized)
    if getattr(args, "measures", None) is not None:
        unknown = set(args.measures) - set(ms.MEASURE_NAMES) - {"all"}
        if unknown:
            parser.error(f"unknown measures: {', '.join(sorted(unknown))}")
    if getattr(args, "vertices", None) is not None:
        try:
            parse_range(args.vertices, args.n_max)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    try:
        return args.func(args, cfg)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    except DivGraphError as exc:
        print(f"divgraph: error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream reader closed early (e.g. `| head`)
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
