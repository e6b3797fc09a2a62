#!/usr/bin/env python3
"""Compare the compiled seed-sweep kernel against the pure-Python fallback.

The workload is the dense NotLinked worst case (pendant clique), which
forces the sweep through every seed edge. Usage:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --sizes 50 100 200 300 --pure-limit 100
"""

import argparse
import time

import numpy as np

from linkdomain import gen_pendant_clique
from linkdomain.kernels import COMPILED_AVAILABLE, pure

if COMPILED_AVAILABLE:
    from linkdomain.kernels import _sweep as compiled
else:
    compiled = None


def time_sweep(kernel, graph, repeats: int = 3) -> float:
    indptr, indices = graph.csr_arrays()
    seed_u, seed_v = graph.seed_arrays()
    sizes = np.zeros(len(graph.edges), dtype=np.int32)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        winner = kernel.sweep_seeds(indptr, indices, seed_u, seed_v, graph.m, sizes)
        best = min(best, time.perf_counter() - start)
        assert winner == -1, "worst case must not be linked"
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[40, 80, 120, 200])
    parser.add_argument(
        "--pure-limit",
        type=int,
        default=120,
        help="skip the pure kernel above this m (it is O(100x) slower)",
    )
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if not COMPILED_AVAILABLE:
        print("note: compiled kernel not built; showing pure-Python timings only")
    print(f"{'m':>5} {'edges':>7} {'compiled':>12} {'pure':>12} {'speedup':>8}")
    for m in args.sizes:
        graph = gen_pendant_clique(m)
        fast = time_sweep(compiled, graph, args.repeats) if COMPILED_AVAILABLE else None
        slow = time_sweep(pure, graph, args.repeats) if m <= args.pure_limit else None
        fast_s = f"{fast * 1000:9.1f} ms" if fast is not None else f"{'-':>12}"
        slow_s = f"{slow * 1000:9.1f} ms" if slow is not None else f"{'-':>12}"
        ratio = f"{slow / fast:7.1f}x" if fast and slow else f"{'-':>8}"
        print(f"{m:>5} {len(graph.edges):>7} {fast_s} {slow_s} {ratio}")


if __name__ == "__main__":
    main()
