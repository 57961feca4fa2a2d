"""Time the numba kernels against the pure-numpy fallback.

Runs each kernel entry point on representative workloads with both backends
and prints a table of timings plus speedups. The first numba call includes
compilation, so each backend is warmed once before timing.

Usage: python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import math
import time

import numpy as np

from hamspec import kernels
from hamspec.graphs import build_graph, distance_matrix, make_path
from hamspec.verify import enumerate_connected_graphs


def _sum_scan_workload(n):
    g = build_graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1), (1, n - 2)])
    h = build_graph(n, [(i, (i + 2) % n) for i in range(n)])
    dist = distance_matrix(g)
    hu = np.fromiter((a for a, _ in h.edges), dtype=np.int64, count=len(h.edges))
    hv = np.fromiter((b for _, b in h.edges), dtype=np.int64, count=len(h.edges))
    return dist, hu, hv


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args()

    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare against")

    cases = []
    for n in (8, 9):
        dist, hu, hv = _sum_scan_workload(n)
        cases.append(
            (
                f"sum scan, n={n} ({math.factorial(n):,} permutations)",
                lambda b, d=dist, u=hu, v=hv: kernels.scan_sums(d, u, v, backend=b),
            )
        )

    graphs7 = enumerate_connected_graphs(7)[:300]
    mats = [kernels.adjacency_matrix(g.n, g.edges) for g in graphs7]
    cases.append(
        (
            f"canonical codes, {len(mats)} graphs on 7 vertices",
            lambda b: [kernels.canonical_code(m, backend=b) for m in mats],
        )
    )

    # warm both paths (numba compiles on first use)
    for _, fn in cases:
        fn("numba")
        fn("numpy")

    width = max(len(name) for name, _ in cases)
    print(f"{'workload'.ljust(width)}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for name, fn in cases:
        t_numba = _time(lambda: fn("numba"), args.repeat)
        t_numpy = _time(lambda: fn("numpy"), args.repeat)
        print(
            f"{name.ljust(width)}  {t_numba * 1000:>8.1f}ms  {t_numpy * 1000:>8.1f}ms"
            f"  {t_numpy / t_numba:>7.1f}x"
        )


if __name__ == "__main__":
    main()
