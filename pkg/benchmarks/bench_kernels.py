#!/usr/bin/env python3
"""Benchmark the compiled subset-DP kernels against the pure-Python fallback.

Usage:
  python benchmarks/bench_kernels.py           # quick sizes
  python benchmarks/bench_kernels.py --full    # up to the solver limits
"""

import argparse
import random
import time

from linewidth.graphs import Graph, _adjacency_masks
from linewidth.kernels import BACKEND, backends

KERNELS = (
    "treewidth_table",
    "vertex_separation_table",
    "cutwidth_table",
    "path_congestion_table",
)


def random_masks(n: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    edges = rng.sample(pairs, max(n, len(pairs) // 3))
    return _adjacency_masks(Graph(n, edges), range(1, n + 1))


def time_call(fn, masks) -> float:
    start = time.perf_counter()
    fn(masks)
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true", help="run the larger sizes")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    impls = backends()
    print(f"selected backend: {BACKEND}; available: {', '.join(impls)}")
    if len(impls) < 2:
        print("compiled kernels not built; nothing to compare")
        return

    sizes = {
        "treewidth_table": [10, 12, 14] + ([16, 18] if args.full else []),
        "vertex_separation_table": [12, 14, 16] + ([18, 20] if args.full else []),
        "cutwidth_table": [12, 14, 16] + ([18, 20] if args.full else []),
        "path_congestion_table": [12, 14, 16] + ([18, 20] if args.full else []),
    }
    header = f"{'kernel':<26} {'n':>3} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name in KERNELS:
        for n in sizes[name]:
            masks = random_masks(n, args.seed)
            pure = time_call(getattr(impls["pure-python"], name), masks)
            comp = time_call(getattr(impls["compiled"], name), masks)
            speedup = pure / comp if comp > 0 else float("inf")
            print(f"{name:<26} {n:>3} {pure:>10.4f} {comp:>13.4f} {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
