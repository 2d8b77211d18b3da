#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Kernel-level timings run both implementations in-process on identical
inputs; the end-to-end row re-runs the crown line graph verifier in a subprocess
with ORBITSPECTRA_BACKEND forced, so the whole stack is measured.

Usage: python benchmarks/bench_backends.py [--repeats N] [--skip-e2e]
"""

import argparse
import os
import subprocess
import sys
import time

from orbitspectra import _pykernels
from orbitspectra.graphs import all_pairs_distances, build_johnson, build_lcr, build_line_graph

try:
    from orbitspectra import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads():
    lcr10 = build_lcr(10)
    adj10 = [list(a) for a in lcr10.adjacency]
    d10 = all_pairs_distances(lcr10).rows
    shifted = [
        [x - 163 if i == j else x for j, x in enumerate(row)]
        for i, row in enumerate(d10)
    ]
    lj = build_line_graph(build_johnson(6, 2))
    dlj = all_pairs_distances(lj).rows

    return [
        ("bfs all-pairs, 90 vertices x100", lambda k: [k.bfs_all_pairs(90, adj10) for _ in range(100)]),
        ("bareiss echelon, 90x90 shifted distance matrix", lambda k: k.bareiss_echelon(shifted)),
        ("berkowitz charpoly, 60x60 distance matrix", lambda k: k.berkowitz_charpoly(dlj)),
        ("berkowitz charpoly, 90x90 distance matrix", lambda k: k.berkowitz_charpoly(d10)),
    ]


def end_to_end(backend):
    env = dict(os.environ, ORBITSPECTRA_BACKEND=backend)
    start = time.perf_counter()
    subprocess.run(
        [sys.executable, "-m", "orbitspectra.cli", "verify-lcr", "--n", "10"],
        check=True, env=env, stdout=subprocess.DEVNULL,
    )
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled backend unavailable; showing pure-Python timings only")

    rows = []
    for name, fn in workloads():
        py = best_of(lambda: fn(_pykernels), args.repeats)
        if _ckernels is not None:
            cc = best_of(lambda: fn(_ckernels), args.repeats)
            rows.append((name, py, cc))
        else:
            rows.append((name, py, None))

    if not args.skip_e2e:
        py = end_to_end("python")
        cc = end_to_end("c") if _ckernels is not None else None
        rows.append(("end-to-end verify-lcr n=10 (subprocess)", py, cc))

    width = max(len(name) for name, _, _ in rows)
    header = f"{'workload'.ljust(width)}  {'python':>10}  {'c':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, py, cc in rows:
        if cc is None:
            print(f"{name.ljust(width)}  {py:>9.3f}s  {'-':>10}  {'-':>8}")
        else:
            print(f"{name.ljust(width)}  {py:>9.3f}s  {cc:>9.3f}s  {py / cc:>7.1f}x")


if __name__ == "__main__":
    main()
