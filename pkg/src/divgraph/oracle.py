"""Brute-force reference: materialise G_N and recompute measures from adjacency.

Only meant for small N. Nothing in here consults divisor counts or floor
formulas; every value comes from the adjacency bitsets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from divgraph.errors import ConfigError, VertexRangeError

ORACLE_CAP = 5000


@dataclass(frozen=True)
class OracleGraph:
    """G_N with one bit-packed adjacency row per vertex.

    ``rows[i]`` has bit ``j`` set iff ``i`` and ``j`` are adjacent; row 0 and
    bit 0 are unused.
    """

    N: int
    rows: tuple[int, ...] = field(repr=False)

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def neighbors(self, n: int) -> list[int]:
        self._check(n)
        row = self.rows[n]
        return [m for m in range(1, self.N + 1) if row >> m & 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(1, self.N + 1) for j in self.neighbors(i) if i < j]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.N:
            raise VertexRangeError(f"vertex {n} is outside 1..{self.N}")


def build_oracle(N: int) -> OracleGraph:
    if not 2 <= N <= ORACLE_CAP:
        raise ConfigError(f"oracle size must lie in [2, {ORACLE_CAP}], got {N}")
    rows = [0] * (N + 1)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if i != j and (j % i == 0 or i % j == 0):
                rows[i] |= 1 << j
    return OracleGraph(N, tuple(rows))


def oracle_degree(g: OracleGraph, n: int) -> int:
    g._check(n)
    return g.rows[n].bit_count()


def oracle_neighbor_edges(g: OracleGraph, n: int) -> int:
    """Triangles through ``n``: adjacent unordered pairs of its neighbours."""
    row = g.rows[n]
    return sum((g.rows[s] & row).bit_count() for s in g.neighbors(n)) // 2


def oracle_nonedge_pairs(g: OracleGraph, n: int) -> int:
    nbrs = g.neighbors(n)
    return sum(
        1 for i, s in enumerate(nbrs) for t in nbrs[i + 1 :] if not g.adjacent(s, t)
    )


def oracle_distances(g: OracleGraph, n: int) -> list[int]:
    """BFS distances from ``n``; entry ``m - 1`` is the distance to vertex ``m``.

    Frontiers are expanded a whole level at a time as bitsets.
    """
    g._check(n)
    dist = [-1] * (g.N + 1)
    dist[n] = 0
    seen = frontier = 1 << n
    level = 0
    while frontier:
        level += 1
        reach = 0
        for u in _bits(frontier):
            reach |= g.rows[u]
        frontier = reach & ~seen
        seen |= frontier
        for v in _bits(frontier):
            dist[v] = level
    return dist[1:]


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def oracle_betweenness(g: OracleGraph, n: int) -> float:
    """Unordered, unnormalised betweenness from common-neighbour counts.

    In a graph of diameter 2 the geodesics between non-adjacent ``s`` and
    ``t`` are exactly the paths through their common neighbours.
    """
    nbrs = g.neighbors(n)
    terms = [
        1.0 / (g.rows[s] & g.rows[t]).bit_count()
        for i, s in enumerate(nbrs)
        for t in nbrs[i + 1 :]
        if not g.adjacent(s, t)
    ]
    return math.fsum(terms)
