#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Covers the three hot loops of the census/acceptance workload:

* per-code transitivity checking (full 3**C(5,3) oriented sweep),
* canonical-form minimization over all vertex bijections,
* the bulk 2**C(6,3) subset transitivity mask.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from cyclord.kernels import _slow
from cyclord.kernels.tables import tables_for

try:
    from cyclord.kernels import _fast
except ImportError:
    _fast = None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def trit_codes(n):
    m = tables_for(n).m
    out = []
    for v in range(3**m):
        code = bytearray(m)
        for i in range(m):
            v, code[i] = divmod(v, 3)
        out.append(bytes(code))
    return out


def bench_transitivity(backend, codes):
    def run():
        check = backend.first_violation
        for code in codes:
            check(5, code)

    return run


def bench_canonical(backend, codes):
    def run():
        canon = backend.canonical_oriented_code
        for code in codes:
            canon(5, code)

    return run


def bench_mask(backend):
    def run():
        backend.transitive_tt_mask(6)

    return run


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    codes5 = trit_codes(5)
    rng = random.Random(99)
    canon_sample = rng.sample(codes5, 2000)
    # warm the shared tables so table construction is not measured
    tables_for(5), tables_for(6)
    _slow.canonical_oriented_code(5, codes5[0])
    if _fast is not None:
        _fast.canonical_oriented_code(5, codes5[0])

    cases = [
        ("transitivity scan, 59049 codes (n=5)", bench_transitivity, (codes5,)),
        ("canonical form, 2000 codes (n=5)", bench_canonical, (canon_sample,)),
        ("subset mask, 2^20 subsets (n=6)", bench_mask, ()),
    ]

    print(f"{'kernel':40s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, factory, extra in cases:
        t_slow = timeit(factory(_slow, *extra), args.repeat)
        if _fast is None:
            print(f"{name:40s} {t_slow * 1e3:9.1f}ms {'n/a':>10s} {'n/a':>8s}")
            continue
        t_fast = timeit(factory(_fast, *extra), args.repeat)
        print(
            f"{name:40s} {t_slow * 1e3:9.1f}ms {t_fast * 1e3:9.1f}ms {t_slow / t_fast:7.1f}x"
        )
    if _fast is None:
        print("\ncompiled backend not built; only the fallback was timed")


if __name__ == "__main__":
    main()
