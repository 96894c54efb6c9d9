"""Compare the compiled and pure-Python enumeration backends.

    python benchmarks/bench_enumeration.py [--repeat N]

Both backends must produce the same canonical table; timings are best-of-N.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from brauer_f4.enumeration import BACKEND, build_table
from brauer_f4.relations import f4_relations


def best_of(backend: str, repeat: int):
    rels = f4_relations().as_int_relations()
    best, table = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        table = build_table(8, rels, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, table


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if BACKEND != "compiled":
        print("compiled extension not available; only the python backend can be timed")
        t, tab = best_of("python", args.repeat)
        print(f"python    {t:8.3f} s  ({len(tab)} nodes)")
        return
    tc, a = best_of("compiled", args.repeat)
    tp, b = best_of("python", args.repeat)
    same = np.array_equal(a.targets, b.targets) and np.array_equal(a.shifts, b.shifts)
    print(f"compiled  {tc:8.3f} s  ({len(a)} nodes, {a.n_defined} defined)")
    print(f"python    {tp:8.3f} s  ({len(b)} nodes, {b.n_defined} defined)")
    print(f"speedup   {tp / tc:8.1f}x   identical tables: {same}")


if __name__ == "__main__":
    main()
