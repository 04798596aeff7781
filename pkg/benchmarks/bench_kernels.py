#!/usr/bin/env python3
"""Benchmark the compiled coset-enumeration kernel against the pure-Python
fallback on representative workloads.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from tightpoly import _ptable
from tightpoly.oracle import brute_force_nonorientable, brute_force_orientable
from tightpoly.presentations import (
    coxeter_presentation,
    delta_presentation,
    lambda_presentation,
)
from tightpoly.enumeration import raw_enumerate

try:
    from tightpoly import _ctable
except ImportError:
    _ctable = None


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_single(name, relators, bound, repeats, rows):
    pure, r_pure = time_call(
        lambda: raw_enumerate(relators, bound, kernel=_ptable), repeats
    )
    if _ctable is None:
        rows.append((name, pure, None, r_pure[0]))
        return
    comp, r_comp = time_call(
        lambda: raw_enumerate(relators, bound, kernel=_ctable), repeats
    )
    assert r_pure == r_comp, f"kernel mismatch on {name}"
    rows.append((name, pure, comp, r_pure[0]))


def bench_sweep(name, fn, repeats, rows):
    pure, r_pure = time_call(lambda: fn(_ptable), repeats)
    if _ctable is None:
        rows.append((name, pure, None, len(r_pure)))
        return
    comp, r_comp = time_call(lambda: fn(_ctable), repeats)
    assert r_pure == r_comp, f"sweep mismatch on {name}"
    rows.append((name, pure, comp, len(r_pure)))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="fewer repeats")
    args = parser.parse_args()
    repeats = 1 if args.quick else 3

    rows = []
    bench_single(
        "Coxeter [3,5] (order 120)",
        coxeter_presentation(3, 5).relators, 65536, repeats, rows,
    )
    bench_single(
        "Lambda(48,32)_{-1,1} (order 3072)",
        lambda_presentation(48, 32, -1, 1).relators, 48 * 32 * 64, repeats, rows,
    )
    bench_single(
        "Delta(12,6)_(2,4,7,2) (order 144)",
        delta_presentation(12, 6, 2, 4, 7, 2).relators, 12 * 6 * 64, repeats, rows,
    )
    bench_sweep(
        "Lambda grid sweep {8,8} (64 groups)",
        lambda k: brute_force_orientable(8, 8, kernel=k), repeats, rows,
    )
    bench_sweep(
        "Delta grid sweep {4,6} (1152 groups)",
        lambda k: brute_force_nonorientable(4, 6, kernel=k), repeats, rows,
    )

    print(f"{'workload':<38} {'pure':>10} {'compiled':>10} {'speedup':>8}   result")
    print("-" * 84)
    for name, pure, comp, result in rows:
        if comp is None:
            print(f"{name:<38} {pure * 1e3:>8.2f}ms {'n/a':>10} {'':>8}   {result}")
        else:
            print(
                f"{name:<38} {pure * 1e3:>8.2f}ms {comp * 1e3:>8.2f}ms "
                f"{pure / comp:>7.1f}x   {result}"
            )
    if _ctable is None:
        print("\ncompiled kernel not built; showing pure-Python timings only")


if __name__ == "__main__":
    main()
