"""Closed-form measures of the divisibility graph G_N.

Every quantity here is computed from the labels alone (floor functions and
divisor counts); the graph itself is never materialised. Clustering values and
mean distances are exact :class:`fractions.Fraction` objects.

Betweenness uses the unordered-pair, unnormalised convention: each
non-adjacent pair ``{s, t}`` contributes once. The ordered-pair sum is exactly
twice this value and the normalised variant divides by ``(N-1)(N-2)``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from divgraph.errors import ConfigError, DivGraphError, DomainError, VertexRangeError, check_width
from divgraph.numtheory import (
    SpfSieve,
    dirichlet_sum,
    divisor_count,
    divisor_count_sum_over_divisors,
    divisors,
    factorize,
    gcd,
)

ExactRatio = Fraction

EULER_GAMMA = 0.577215664901532861
DEFAULT_PAIR_BUDGET = 10**4

MEASURE_NAMES = (
    "degree",
    "neighbor_edges",
    "clustering",
    "mean_geodesic",
    "nonedge_pairs",
    "betweenness",
)


@dataclass(frozen=True)
class GraphSpec:
    N: int

    def __post_init__(self) -> None:
        if self.N < 2:
            raise ConfigError(f"graph size N must be at least 2, got {self.N}")

    def check_vertex(self, n: int) -> None:
        if not 1 <= n <= self.N:
            raise VertexRangeError(f"vertex {n} is outside 1..{self.N}")

    def check_range(self, lo: int, hi: int, upper: int | None = None) -> None:
        upper = self.N if upper is None else upper
        if not 1 <= lo <= hi <= upper:
            raise VertexRangeError(f"range {lo}..{hi} is not inside 1..{upper}")


@dataclass
class MeasureRecord:
    n: int
    k: int | None = None
    e: int | None = None
    c: Fraction | None = None
    l: Fraction | None = None
    nonedge: int | None = None
    x: float | None = None
    error: str | None = None


@dataclass(frozen=True)
class DeltaCRecord:
    n: int
    delta: Fraction
    same_floor_band: bool
    same_s: bool
    divisor_sum_offset: int

    @property
    def zero_condition(self) -> bool:
        return self.same_floor_band and self.same_s and self.divisor_sum_offset == 0


class PrimeBand(str, Enum):
    ZERO = "zero-band"
    ONE = "one-band"
    GENERAL = "general"


def _sieve_for(spec: GraphSpec, sieve: SpfSieve) -> None:
    if sieve.limit < spec.N:
        raise ConfigError(f"sieve limit {sieve.limit} is smaller than N={spec.N}")


def _pairs(k: int) -> int:
    return k * (k - 1) // 2


def degree(n: int, spec: GraphSpec, sieve: SpfSieve) -> int:
    spec.check_vertex(n)
    return spec.N // n + divisor_count(factorize(n, sieve)) - 2


def neighbor_edge_count(n: int, spec: GraphSpec, sieve: SpfSieve) -> int:
    """Number of adjacent pairs among the neighbours of ``n``.

    Edges among the proper divisors, edges among the proper multiples, and
    the divisor-multiple edges, which are all present.
    """
    spec.check_vertex(n)
    f = factorize(n, sieve)
    s = divisor_count(f)
    M = spec.N // n
    among_multiples = dirichlet_sum(M) - M
    total = divisor_count_sum_over_divisors(f) - 2 * s + 1 + among_multiples + (M - 1) * (s - 2)
    return check_width(total, "e_n")


def _clustering_parts(n: int, spec: GraphSpec, sieve: SpfSieve) -> tuple[int, int]:
    k = degree(n, spec, sieve)
    return neighbor_edge_count(n, spec, sieve), _pairs(k)


def clustering(n: int, spec: GraphSpec, sieve: SpfSieve) -> Fraction:
    e, pairs = _clustering_parts(n, spec, sieve)
    if pairs == 0:
        return Fraction(0)
    return Fraction(e, pairs)


def prime_clustering_band(p: int, spec: GraphSpec, sieve: SpfSieve) -> PrimeBand:
    spec.check_vertex(p)
    if not sieve.is_prime(p):
        raise DomainError(f"{p} is not prime")
    N = spec.N
    if p > N // 2:
        return PrimeBand.ZERO
    if p > N // 3:
        return PrimeBand.ONE
    return PrimeBand.GENERAL


def geodesic_distance(n: int, m: int, spec: GraphSpec) -> int:
    spec.check_vertex(n)
    spec.check_vertex(m)
    if n == m:
        return 0
    if m % n == 0 or n % m == 0:
        return 1
    return 2


def mean_geodesic(n: int, spec: GraphSpec, sieve: SpfSieve) -> Fraction:
    k = degree(n, spec, sieve)
    return Fraction(2 * spec.N - k - 2, spec.N)


def _adjacent(a: int, b: int) -> bool:
    return a % b == 0 or b % a == 0


def geodesic_path_count(s: int, t: int, spec: GraphSpec, sieve: SpfSieve) -> int:
    """Number of length-2 paths between non-adjacent ``s`` and ``t``.

    Common divisors contribute s(gcd); common multiples contribute
    floor(N / lcm).
    """
    spec.check_vertex(s)
    spec.check_vertex(t)
    if s == t or _adjacent(s, t):
        raise DomainError(f"vertices {s} and {t} are adjacent or equal; g_st needs a non-edge")
    d = gcd(s, t)
    return divisor_count(factorize(d, sieve)) + spec.N * d // (s * t)


def neighbors(n: int, spec: GraphSpec, sieve: SpfSieve) -> list[int]:
    """Neighbours of ``n`` in ascending order: proper divisors, then proper multiples."""
    spec.check_vertex(n)
    return divisors(n, sieve)[:-1] + list(range(2 * n, spec.N + 1, n))


def betweenness(
    n: int,
    spec: GraphSpec,
    sieve: SpfSieve,
    *,
    budget: int | None = DEFAULT_PAIR_BUDGET,
) -> float:
    """Unordered, unnormalised betweenness of ``n``.

    Sums 1/g_st over non-adjacent neighbour pairs. A divisor and a multiple of
    ``n`` are always adjacent, so only divisor-divisor and multiple-multiple
    pairs are visited. Pass ``budget=None`` to lift the neighbour-count guard.
    """
    _sieve_for(spec, sieve)
    nbrs = neighbors(n, spec, sieve)
    if budget is not None and len(nbrs) > budget:
        raise ConfigError(
            f"vertex {n} has {len(nbrs)} neighbours, above the pair-enumeration budget of {budget}"
        )
    n_div = divisor_count(factorize(n, sieve)) - 1
    terms: list[float] = []
    for group in (nbrs[:n_div], nbrs[n_div:]):
        for i, s in enumerate(group):
            for t in group[i + 1 :]:
                if t % s:
                    terms.append(1.0 / geodesic_path_count(s, t, spec, sieve))
    return math.fsum(terms)


def betweenness_prime(p: int, spec: GraphSpec, sieve: SpfSieve) -> float:
    """Betweenness of a prime from the multiplier pairs ``(j, k)`` of ``p``."""
    spec.check_vertex(p)
    if not sieve.is_prime(p):
        raise DomainError(f"{p} is not prime")
    N = spec.N
    M = N // p
    terms: list[float] = []
    for j in range(2, M + 1):
        for k in range(j + 1, M + 1):
            if k % j == 0:
                continue
            d = gcd(j, k)
            g = divisor_count(factorize(d * p, sieve)) + N // (p * j * k // d)
            terms.append(1.0 / g)
    return math.fsum(terms)


def nonedge_neighbor_pairs(n: int, spec: GraphSpec, sieve: SpfSieve) -> int:
    e, pairs = _clustering_parts(n, spec, sieve)
    return pairs - e


def edge_count(spec: GraphSpec) -> int:
    return dirichlet_sum(spec.N) - spec.N


def connectance_exact(spec: GraphSpec) -> Fraction:
    return Fraction(edge_count(spec), _pairs(spec.N))


def connectance_asymptotic(spec: GraphSpec) -> float:
    N = spec.N
    return (N * math.log(N) + 2 * (EULER_GAMMA - 1) * N) / _pairs(N)


def delta_clustering_scan(spec: GraphSpec, lo: int, hi: int, sieve: SpfSieve) -> list[DeltaCRecord]:
    """Consecutive clustering differences c_n - c_{n+1} for ``n`` in ``lo..hi``.

    The difference is formed by cross-multiplying the unreduced parts
    ``e / C(k, 2)`` so the zero test is exact.
    """
    spec.check_range(lo, hi, upper=spec.N - 1)
    _sieve_for(spec, sieve)
    N = spec.N

    def parts(m: int) -> tuple[int, int, int, int]:
        f = factorize(m, sieve)
        e, pairs = _clustering_parts(m, spec, sieve)
        if pairs == 0:
            e, pairs = 0, 1
        return e, pairs, divisor_count(f), divisor_count_sum_over_divisors(f)

    records = []
    cur = parts(lo)
    for n in range(lo, hi + 1):
        nxt = parts(n + 1)
        e0, p0, s0, sum0 = cur
        e1, p1, s1, sum1 = nxt
        num = check_width(e0 * p1 - e1 * p0, "cross-multiplied clustering")
        den = check_width(p0 * p1, "cross-multiplied clustering")
        records.append(
            DeltaCRecord(
                n=n,
                delta=Fraction(num, den),
                same_floor_band=N // n == N // (n + 1),
                same_s=s0 == s1,
                divisor_sum_offset=sum0 - sum1,
            )
        )
        cur = nxt
    return records


def offset_distribution(records: Iterable[DeltaCRecord]) -> Counter[int]:
    """Histogram of divisor-sum offsets over pairs with equal divisor counts."""
    return Counter(r.divisor_sum_offset for r in records if r.same_s)


def measure_table(
    spec: GraphSpec,
    lo: int,
    hi: int,
    selection: Iterable[str],
    sieve: SpfSieve,
    *,
    budget: int | None = DEFAULT_PAIR_BUDGET,
) -> list[MeasureRecord]:
    """One :class:`MeasureRecord` per vertex in ``lo..hi``.

    A vertex whose computation fails (for instance betweenness over budget)
    yields a record with ``error`` set instead of aborting the table.
    """
    selected = set(selection)
    if not selected:
        raise ConfigError("measure selection is empty")
    unknown = selected - set(MEASURE_NAMES)
    if unknown:
        raise ConfigError(f"unknown measures: {', '.join(sorted(unknown))}")
    spec.check_range(lo, hi)
    _sieve_for(spec, sieve)

    rows = []
    for n in range(lo, hi + 1):
        rec = MeasureRecord(n)
        try:
            k = degree(n, spec, sieve)
            if "degree" in selected:
                rec.k = k
            if selected & {"neighbor_edges", "clustering", "nonedge_pairs"}:
                e = neighbor_edge_count(n, spec, sieve)
                if "neighbor_edges" in selected:
                    rec.e = e
                if "clustering" in selected:
                    rec.c = Fraction(e, _pairs(k)) if k >= 2 else Fraction(0)
                if "nonedge_pairs" in selected:
                    rec.nonedge = _pairs(k) - e
            if "mean_geodesic" in selected:
                rec.l = Fraction(2 * spec.N - k - 2, spec.N)
            if "betweenness" in selected:
                rec.x = betweenness(n, spec, sieve, budget=budget)
        except DivGraphError as exc:
            rec.error = str(exc)
        rows.append(rec)
    return rows
