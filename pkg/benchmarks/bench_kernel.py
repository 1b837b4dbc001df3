"""Compare the compiled selection-scan kernel against the pure-Python twin.

Usage: python benchmarks/bench_kernel.py [--max-edges N] [--seed S]
"""

import argparse
import time

from mapdelta import _scan, _scan_py
from mapdelta.fixtures import get_fixture
from mapdelta.random_maps import random_map


def time_kernel(mod, cmap, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = mod.survey_selections(
            cmap.n_flags, cmap.n_edges, cmap.rho_r, cmap.rho_g, cmap.rho_b, cmap.edge_of_flag
        )
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-edges", type=int, default=16)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    subjects = [get_fixture("k5torus")]
    big = random_map(args.seed, max_edges=args.max_edges)
    if big.n_edges < args.max_edges:  # retry until the edge budget is hit
        for s in range(args.seed + 1, args.seed + 200):
            big = random_map(s, max_edges=args.max_edges)
            if big.n_edges == args.max_edges:
                break
    subjects.append(big)

    if not _scan.IS_COMPILED:
        print("warning: compiled kernel unavailable; comparing python to itself")
    for cmap in subjects:
        t_c, res_c = time_kernel(_scan, cmap)
        t_py, res_py = time_kernel(_scan_py, cmap, repeat=1)
        assert [list(x) for x in res_c] == [list(x) for x in res_py]
        print(
            "%-12s m=%2d 2^m=%8d  compiled %8.4fs  python %8.4fs  speedup %6.1fx"
            % (cmap.name, cmap.n_edges, 1 << cmap.n_edges, t_c, t_py, t_py / t_c)
        )


if __name__ == "__main__":
    main()
