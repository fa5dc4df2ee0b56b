#!/usr/bin/env python3
"""Benchmark the disjoint-pair kernels (compiled Cython vs pure Python).

The enumeration is O(E^2) with E = 6ab lines, so the compiled kernel is
what keeps large bidegrees interactive.  Example:

    python benchmarks/bench_pairs.py --sizes 4,8,12,16,20 --repeat 3
"""
import argparse
import time

from pillowdeg import build_pillow, formula_disjoint_pairs
from pillowdeg import pairs


def best_of(impl, edges, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = impl(edges)
        best = min(best, time.perf_counter() - start)
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="4,8,12,16,20",
                        help="comma-separated n; each benchmarks bidegree (n, n)")
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",") if s]
    impls = pairs.implementations()
    print(f"selected kernel: {pairs.KERNEL}")
    if "compiled" not in impls:
        print("compiled kernel unavailable; timing the pure fallback only")

    header = f"{'(a,b)':>8} {'lines':>7} {'pairs':>12}"
    for name in impls:
        header += f" {name + ' [s]':>14}"
    if len(impls) == 2:
        header += f" {'speedup':>9}"
    print(header)

    for n in sizes:
        c = build_pillow(n, n)
        edges = [ln.pair for ln in c.lines]
        total_pairs = len(edges) * (len(edges) - 1) // 2
        row = f"{f'({n},{n})':>8} {len(edges):>7} {total_pairs:>12}"
        times = {}
        result = None
        for name, impl in impls.items():
            value, elapsed = best_of(impl, edges, args.repeat)
            if result is None:
                result = value
            elif value != result:
                raise SystemExit(f"kernel disagreement at ({n},{n}): {value} != {result}")
            times[name] = elapsed
            row += f" {elapsed:>14.6f}"
        if result != formula_disjoint_pairs(c.g):
            raise SystemExit(f"kernel result {result} disagrees with the closed form")
        if len(times) == 2:
            row += f" {times['python'] / times['compiled']:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
