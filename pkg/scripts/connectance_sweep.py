#!/usr/bin/env python3
"""Relative error of the asymptotic connectance, scaled by sqrt(N) / (N ln N).

If the neglected term is O(sqrt N), the last column stays bounded.
"""

import math
import sys

from divgraph import GraphSpec, connectance_asymptotic, connectance_exact

top = int(sys.argv[1]) if len(sys.argv) > 1 else 10**7
print("N,relative_error,scaled")
N = 10
while N <= top:
    spec = GraphSpec(N)
    exact = float(connectance_exact(spec))
    rel = abs(connectance_asymptotic(spec) - exact) / exact
    print(f"{N},{rel:.3e},{rel * N * math.log(N) / math.sqrt(N):.4f}")
    N *= 10
