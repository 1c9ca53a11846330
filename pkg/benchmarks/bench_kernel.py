#!/usr/bin/env python3
"""Compare the compiled window-scan kernel against the pure-Python twin.

The workload mirrors the essential-part acceptance suite: per random class,
one uniqueness scan over all boundary and orbit coordinates.  Run after an
editable install; if the extension is not built only the pure numbers are
reported.

    python benchmarks/bench_kernel.py [--classes 20000] [--window 3]
"""

from __future__ import annotations

import argparse
import random
import time

from posfact import _kernel_py

try:
    from posfact import _kernel
except ImportError:
    _kernel = None


def build_workload(count: int, seed: int = 2024) -> list[tuple[list[int], list[int], list[int]]]:
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        n = rng.randint(0, 12)
        nums = [rng.randint(-50, 50) for _ in range(n)]
        dens = [rng.randint(1, 12) for _ in range(n)]
        betas = [rng.choice([1, 1, 2]) for _ in range(n)]
        cases.append((nums, dens, betas))
    return cases


def run(kernel, cases, window: int) -> float:
    start = time.perf_counter()
    for nums, dens, betas in cases:
        kernel.scan_class(nums, dens, betas, window)
    return time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--classes", type=int, default=20_000)
    parser.add_argument("--window", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    cases = build_workload(args.classes)
    backends = [("pure", _kernel_py)]
    if _kernel is not None:
        backends.append(("compiled", _kernel))
    else:
        print("compiled kernel not built; showing pure numbers only")

    results = {}
    for name, kernel in backends:
        best = min(run(kernel, cases, args.window) for _ in range(args.repeats))
        results[name] = best
        rate = args.classes / best
        print(f"{name:>9}: {best * 1e3:8.1f} ms for {args.classes} scans  ({rate:,.0f} scans/s)")
    if len(results) == 2:
        print(f"  speedup: {results['pure'] / results['compiled']:.2f}x (compiled over pure)")

    # Sanity: identical outputs on the benchmark workload.
    if _kernel is not None:
        for nums, dens, betas in cases[:2000]:
            assert _kernel.scan_class(nums, dens, betas, args.window) == _kernel_py.scan_class(
                nums, dens, betas, args.window
            )
        print("  agreement check on 2000 cases: ok")


if __name__ == "__main__":
    main()
