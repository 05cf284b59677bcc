"""Benchmark the compiled enumeration kernels against the pure-Python ones.

Workloads are the box scans behind the rank-4 Seshadri computation: the full
example-table reproduction with pruning, and single naive reference boxes of
increasing radius.  The naive pure-Python scan of the largest table box
(radius 100, ~8e8 tuples) takes on the order of an hour, so by default the
pure backend only runs the smaller boxes; pass --full to time everything.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--full]
"""
from __future__ import annotations

import argparse
import time

from seshadri import cm, kernels
from seshadri.cli import TABLE2_CLASSES
from seshadri.lattice import Surface, ns_class

#: (label, class, naive search radius)
NAIVE_BOXES = (
    ("naive box, radius 10", (1, 1, 1, 1)),
    ("naive box, radius 16", (0, 0, 1, 1)),
    ("naive box, radius 40", (8, 5, -1, -2)),
)
SLOW_FOR_PURE = {"naive box, radius 40"}


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--full", action="store_true",
                        help="also run the slow pure-Python naive boxes")
    args = parser.parse_args()

    backends = ["pure"] + (["compiled"] if kernels.HAVE_COMPILED else [])
    if not kernels.HAVE_COMPILED:
        print("note: compiled kernels not built; timing the pure path only")
    print(f"workers: {kernels.worker_count()} (override with SESHADRI_THREADS)")
    print()
    print(f"{'workload':<28}" + "".join(f"{b:>12}" for b in backends))

    def table_row(label, fn, skip_pure=False):
        cells = []
        for backend in backends:
            if backend == "pure" and skip_pure and not args.full:
                cells.append(f"{'(skipped)':>12}")
                continue
            seconds = _time(lambda: fn(backend), args.repeat)
            cells.append(f"{seconds:>11.3f}s")
        print(f"{label:<28}" + "".join(cells))

    def run_table(backend):
        for coeffs in TABLE2_CLASSES:
            cm.seshadri_constant(
                ns_class(Surface.CM_GAUSSIAN, coeffs), prune=True, backend=backend
            )

    table_row("12-row table, pruned", run_table)
    for label, coeffs in NAIVE_BOXES:
        L = ns_class(Surface.CM_GAUSSIAN, coeffs)

        def run_box(backend, L=L):
            cm.seshadri_constant(L, prune=False, backend=backend)

        table_row(label, run_box, skip_pure=label in SLOW_FOR_PURE)


if __name__ == "__main__":
    main()
