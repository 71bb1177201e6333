"""Compare the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints one line per workload with the best wall time of each backend and the
speedup. Both backends must return identical results; a mismatch aborts.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from resetkit.automaton import cerny_automaton
from resetkit.kernels import compiled_backend, python_backend
from resetkit.reductions import build_maxsat_gadget
from resetkit.cnf import Cnf
from resetkit.sat.encode import BoundedResetQuery, encode_short_reset


def best_time(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def workloads():
    rng = np.random.default_rng(7)
    cerny = cerny_automaton(12).table
    yield "explore cerny-12", "explore_subsets", (cerny,), {}
    rand = rng.integers(0, 14, size=(14, 2), dtype=np.int32)
    yield "explore random-14 full", "explore_subsets", (rand,), {"stop_at_singleton": False}
    big = rng.integers(0, 300, size=(300, 3), dtype=np.int32)
    yield "pairs random-300", "pair_distances", (big,), {}
    gadget = build_maxsat_gadget(Cnf.of([[1, 2], [-1], [-2]])).automaton
    yield "pairs maxsat-gadget", "pair_distances", (gadget.table,), {}
    enc = encode_short_reset(BoundedResetQuery(cerny_automaton(5), 15), prune=False).cnf
    yield "dpll cerny-5 k=15 (unsat)", "dpll_solve", (enc.variable_count, enc.clauses), {}
    enc = encode_short_reset(BoundedResetQuery(cerny_automaton(5), 16), prune=False).cnf
    yield "dpll cerny-5 k=16 (sat)", "dpll_solve", (enc.variable_count, enc.clauses), {}


def same(x, y) -> bool:
    if isinstance(x, tuple):
        return len(x) == len(y) and all(same(a, b) for a, b in zip(x, y))
    if isinstance(x, np.ndarray):
        return np.array_equal(x, y)
    return x == y


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if compiled_backend is None:
        print("compiled backend not available; build with `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    print(f"{'workload':32s} {'compiled':>10s} {'python':>10s} {'speedup':>8s}")
    for name, kernel, pos, kw in workloads():
        tc, rc = best_time(lambda: getattr(compiled_backend, kernel)(*pos, **kw), args.repeat)
        tp, rp = best_time(lambda: getattr(python_backend, kernel)(*pos, **kw), args.repeat)
        if not same(rc, rp):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        print(f"{name:32s} {tc * 1e3:9.2f}ms {tp * 1e3:9.2f}ms {tp / tc:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
