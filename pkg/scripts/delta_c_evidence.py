#!/usr/bin/env python3
"""Tabulate zero clustering differences and divisor-sum offsets across graph sizes.

For each N, counts the n with c_n == c_{n+1}, splits them by whether equal
floor band, equal divisor count and zero divisor-sum offset all hold, and
prints the offset histogram over consecutive pairs with equal divisor count.
"""

from __future__ import annotations

import argparse

from divgraph import GraphSpec, build_sieve, delta_clustering_scan
from divgraph.measures import offset_distribution


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("sizes", type=int, nargs="*", default=[100, 1000, 5000, 20000])
    args = parser.parse_args()
    sieve = build_sieve(max(args.sizes))
    print("N,zero,zero_with_conditions,zero_without_conditions,offset_histogram")
    for N in args.sizes:
        recs = delta_clustering_scan(GraphSpec(N), 1, N - 1, sieve)
        zeros = [r for r in recs if r.delta == 0]
        explained = sum(r.zero_condition for r in zeros)
        hist = " ".join(f"{k}:{v}" for k, v in sorted(offset_distribution(recs).items()))
        print(f"{N},{len(zeros)},{explained},{len(zeros) - explained},{hist}")


if __name__ == "__main__":
    main()
