#!/usr/bin/env python3
"""Write the plot-ready CSVs for figures 2a, 2b, 2c and 3 into a directory."""

from __future__ import annotations

import argparse
from pathlib import Path

from divgraph.cli import FIGURE_DEFAULT_N, main

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", type=Path)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)
    for which, N in FIGURE_DEFAULT_N.items():
        path = args.outdir / f"figure_{which}_N{N}.csv"
        main(["figure", which, "--out", str(path)])
        print(path)
