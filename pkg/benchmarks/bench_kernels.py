"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py [--repeat N] [--harness]

``--harness`` also times a full ``theorems`` run under each backend in a
subprocess (the fallback is forced with NILCLEAN_PURE_PYTHON=1).
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from nilclean import build_ring, kernels

RINGS = ["Z50", "Z12 x Z12", "T2(Z6)", "Morita(Z4, Z4, Z4, Z4, mul)", "Z16 x Z16"]


def cases(ring):
    s = ring.sets
    A, M = ring.add_table, ring.mul_table
    neg = np.asarray(ring.neg_table, dtype=np.int32)
    idem = np.asarray(s.idempotents, dtype=np.int32)
    xs = np.arange(ring.size, dtype=np.int32)
    nil = s.is_nil.astype(np.uint8)
    unit = s.is_unit.astype(np.uint8)
    gens = np.asarray([ring.size // 3], dtype=np.int32)
    return {
        "nilpotency_indices": lambda k: k.nilpotency_indices(M, ring.zero),
        "unit_inverses": lambda k: k.unit_inverses(M, ring.one),
        "jacobson_mask": lambda k: k.jacobson_mask(M, s.one_minus, unit, True),
        "ideal_closure": lambda k: k.subgroup_closure(A, k.two_sided_products(M, gens)),
        "decompose_search": lambda k: k.decompose_search(A, neg, M, xs, idem, nil, True, False),
    }


def bench(repeat):
    compiled = kernels.compiled_backend
    if compiled is None:
        print("compiled backend unavailable; only the numpy fallback can be timed")
    print(f"{'ring':<30} {'kernel':<20} {'numpy ms':>10} {'cython ms':>10} {'speedup':>8}")
    for spec in RINGS:
        ring = build_ring(spec)
        for name, fn in cases(ring).items():
            t_py = min(timeit.repeat(lambda: fn(kernels.python_backend), number=1, repeat=repeat)) * 1e3
            if compiled is not None:
                t_c = min(timeit.repeat(lambda: fn(compiled), number=1, repeat=repeat)) * 1e3
                print(f"{spec:<30} {name:<20} {t_py:>10.3f} {t_c:>10.3f} {t_py / t_c:>7.1f}x")
            else:
                print(f"{spec:<30} {name:<20} {t_py:>10.3f} {'-':>10} {'-':>8}")


def harness():
    cmd = [sys.executable, "-c",
           "import time, nilclean.theorems as t; s=time.perf_counter(); t.run_all(); "
           "print(f'{time.perf_counter()-s:.2f}')"]
    for label, extra in (("cython", {}), ("numpy", {"NILCLEAN_PURE_PYTHON": "1"})):
        out = subprocess.run(cmd, env={**os.environ, **extra}, capture_output=True, text=True, check=True)
        print(f"full theorem harness, {label} backend: {out.stdout.strip()} s")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--harness", action="store_true")
    args = p.parse_args()
    bench(args.repeat)
    if args.harness:
        harness()


if __name__ == "__main__":
    main()
