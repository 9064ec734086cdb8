"""Structural measures of the divisibility graph on 1..N."""

from divgraph.errors import (
    ConfigError,
    DivGraphError,
    DomainError,
    VertexRangeError,
    WidthOverflowError,
)
from divgraph.measures import (
    DeltaCRecord,
    ExactRatio,
    GraphSpec,
    MeasureRecord,
    PrimeBand,
    betweenness,
    betweenness_prime,
    clustering,
    connectance_asymptotic,
    connectance_exact,
    degree,
    delta_clustering_scan,
    geodesic_distance,
    geodesic_path_count,
    mean_geodesic,
    measure_table,
    neighbor_edge_count,
    nonedge_neighbor_pairs,
    prime_clustering_band,
)
from divgraph.numtheory import (
    Factorization,
    SpfSieve,
    build_sieve,
    dirichlet_sum,
    divisor_count,
    divisor_count_sum_over_divisors,
    divisors,
    factorize,
    gcd,
)
from divgraph.oracle import OracleGraph, build_oracle

__all__ = [name for name in dir() if not name.startswith("_")]
