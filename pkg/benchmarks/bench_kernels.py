#!/usr/bin/env python3
"""Benchmark the jitted scans against the pure-numpy fallback.

Representative workloads: the full CB scan, the centralizer-ideal
scan, and the CB-element mask on random anticommutative tables over
small prime fields.  Both backends are run on identical inputs and
asserted to agree; jit compilation is warmed up outside the timers.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

import numpy as np

from cbalg import kernels
from cbalg.construct import random_anticommutative, random_cb_algebra, random_graded
from cbalg.fields import PrimeField

# "bonding" inputs pass the scans, so every element is visited; "anti"
# and "graded" inputs exercise the early-exit path on violations
WORKLOADS = [
    ("cb_scan  + F2 dim 10", "cb_scan", 2, 10, "bonding"),
    ("cb_scan  + F3 dim 7", "cb_scan", 3, 7, "bonding"),
    ("cb_scan  - F3 dim 7", "cb_scan", 3, 7, "anti"),
    ("cl_scan  + F3 dim 7", "cl_scan", 3, 7, "bonding"),
    ("cl_scan  - F5 dim 5", "cl_scan", 5, 5, "graded"),
    ("cb_mask    F3 dim 5", "cb_element_mask", 3, 5, "anti"),
    ("cb_mask    F2 dim 8", "cb_element_mask", 2, 8, "anti"),
]

BONDING_SHAPES = {(2, 10): (4, 0), (3, 7): (3, 1)}


def build(p, dim, kind, seed=7):
    F = PrimeField(p)
    if kind == "anti":
        A = random_anticommutative(seed, F, dim, sparsity=0.3)
    elif kind == "bonding":
        r, dim_z = BONDING_SHAPES[(p, dim)]
        A = random_cb_algebra(seed, F, r, dim_z, sparsity=0.6)
        assert A.dim == dim
    else:
        A = random_graded(seed, F, dim, sparsity=0.4)
    return kernels.mod_tensor(A), p, kernels.vectors_mod_p(p, dim)


def time_call(fn, *args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = []
    for name in kernels.available_backends():
        backends.append(kernels.backend(name))
    if len(backends) < 2:
        print("only one backend available; timing it alone")

    kernels.warmup()
    print(f"{'workload':<22} " + " ".join(f"{b.NAME:>10}" for b in backends) + "   speedup")
    for label, op, p, dim, kind in WORKLOADS:
        c, p, V = build(p, dim, kind)
        times = []
        results = []
        for b in backends:
            fn = getattr(b, op)
            t, r = time_call(fn, c, p, V, repeat=args.repeat)
            times.append(t)
            results.append(r)
        for r in results[1:]:
            if isinstance(r, np.ndarray):
                assert np.array_equal(r, results[0]), f"backend disagreement on {label}"
            else:
                assert r == results[0], f"backend disagreement on {label}"
        cells = " ".join(f"{t * 1000:>8.2f}ms" for t in times)
        speedup = ""
        if len(times) == 2:
            slow, fast = max(times), min(times)
            speedup = f"{slow / fast:>8.1f}x"
        print(f"{label:<22} {cells} {speedup}")


if __name__ == "__main__":
    main()
