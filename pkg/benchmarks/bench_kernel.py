#!/usr/bin/env python3
"""Benchmark the compiled DPLL kernel against the pure-Python fallback
on random 3-CNF near the satisfiability threshold.

Usage: python3 benchmarks/bench_kernel.py [max_vars]
"""

import random
import sys
import time

from dlbackdoor import _kernel_py

try:
    from dlbackdoor import _kernel
except ImportError:
    _kernel = None


def random_3cnf(rng, n_vars, ratio=4.2):
    n_clauses = int(n_vars * ratio)
    clauses = []
    for _ in range(n_clauses):
        vs = rng.sample(range(1, n_vars + 1), 3)
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return clauses


def bench(backend, instances):
    start = time.perf_counter()
    verdicts = [backend.solve_dpll(n, cls) is not None for n, cls in instances]
    return time.perf_counter() - start, verdicts


def main():
    max_vars = int(sys.argv[1]) if len(sys.argv) > 1 else 80
    rng = random.Random(20240817)
    sizes = [n for n in (30, 50, max_vars) if n > 0]
    print(f"{'n_vars':>8} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for n in sizes:
        instances = [(n, random_3cnf(rng, n)) for _ in range(10)]
        t_py, v_py = bench(_kernel_py, instances)
        if _kernel is None:
            print(f"{n:>8} {t_py:>10.3f} {'(not built)':>11}")
            continue
        t_cy, v_cy = bench(_kernel, instances)
        if v_py != v_cy:
            raise SystemExit("backend verdicts disagree")
        print(f"{n:>8} {t_py:>10.3f} {t_cy:>11.3f} {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
