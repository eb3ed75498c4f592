"""Compare the jit backend against the interpreted fallback.

Runs itself twice as a subprocess (once per MESHPERM_BACKEND value),
times a fixed set of workloads in each, and prints a small table.

    python3 benchmarks/bench_backends.py [--n 7] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import math
import os
import subprocess
import sys
import time


def _workloads(n: int):
    import meshperm
    from meshperm import _kernels as K
    from meshperm import enumeration, mesh, verify

    if meshperm.BACKEND == "numba":
        K.warmup()  # compile (or load from disk cache) outside the timers

    total = math.factorial(n)

    def stats_sweep():
        K._sweep_stats14(n, 0, total, 0)

    def involution_sweep():
        verify._first_bad_worker("involutions", n, 0, total, None)

    def avoider_count():
        enumeration.enumerate_class(
            [mesh.catalog("A"), mesh.catalog("D", 3)], n, want_list=False
        )

    def oracle_sweep():
        verify._first_bad_worker("oracle", n, 0, total, ((1, 13), 0))

    return [
        (f"statistic sweep over S_{n}", stats_sweep),
        (f"involution round-trips over S_{n}", involution_sweep),
        (f"avoider count in S_{n}", avoider_count),
        (f"mesh-engine oracle over S_{n}", oracle_sweep),
    ]


def _run_worker(n: int, repeat: int) -> None:
    import meshperm

    results = {}
    for label, fn in _workloads(n):
        best = math.inf
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        results[label] = best
    print(json.dumps({"backend": meshperm.BACKEND, "times": results}))


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.worker:
        _run_worker(args.n, args.repeat)
        return 0

    rows = {}
    for backend in ("numba", "python"):
        env = dict(os.environ, MESHPERM_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, __file__, "--worker", "--n", str(args.n), "--repeat", str(args.repeat)],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        payload = json.loads(out.stdout.strip().splitlines()[-1])
        rows[payload["backend"]] = payload["times"]

    labels = list(next(iter(rows.values())))
    width = max(len(s) for s in labels)
    print(f"{'workload':<{width}}  {'numba':>10}  {'python':>10}  {'speedup':>8}")
    for label in labels:
        a = rows["numba"][label]
        b = rows["python"][label]
        print(f"{label:<{width}}  {a:>9.4f}s  {b:>9.4f}s  {b / a:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
