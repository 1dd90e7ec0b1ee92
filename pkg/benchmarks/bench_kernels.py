#!/usr/bin/env python3
"""Time the numba kernels against their pure-numpy fallbacks.

Usage:
    python3 benchmarks/bench_kernels.py [--sizes 200,500,1000] [--repeats 3]

The reduction benchmark uses random filtration-style boundary columns, the
matching benchmark random bipartite graphs.  Both implementations are run
on identical inputs and checked for agreement before timing.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from fcw import _kernels


def random_columns(rng: random.Random, n: int, fill: int = 6) -> list[list[int]]:
    columns: list[list[int]] = [[]]
    for j in range(1, n):
        k = rng.randint(0, min(fill, j))
        columns.append(sorted(rng.sample(range(j), k)))
    return columns


def random_csr(rng: random.Random, n: int, density: float = 0.05):
    indptr = np.zeros(n + 1, dtype=np.int64)
    rows = []
    for u in range(n):
        row = [v for v in range(n) if rng.random() < density]
        rows.append(row)
        indptr[u + 1] = indptr[u] + len(row)
    indices = np.array([v for row in rows for v in row], dtype=np.int64)
    return indptr, indices


def timeit(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_reduction(n: int, repeats: int, rng: random.Random) -> tuple[float, float]:
    columns = random_columns(rng, n)
    bits = _kernels.pack_columns(columns, n)
    expected = _kernels._reduce_np(bits.copy(), n)
    got = _kernels._reduce_njit(bits.copy(), n)
    assert expected.tolist() == got.tolist(), "kernel paths disagree"
    t_np = timeit(lambda: _kernels._reduce_np(bits.copy(), n), repeats)
    t_nb = timeit(lambda: _kernels._reduce_njit(bits.copy(), n), repeats)
    return t_np, t_nb

def bench_matching(n: int, repeats: int, rng: random.Random) -> tuple[float, float]:
    indptr, indices = random_csr(rng, n)
    expected = _kernels._matching_py(indptr, indices, n, n)
    got = int(_kernels._matching_njit(indptr, indices, n, n))
    assert expected == got, "kernel paths disagree"
    t_py = timeit(lambda: _kernels._matching_py(indptr, indices, n, n), repeats)
    t_nb = timeit(lambda: _kernels._matching_njit(indptr, indices, n, n), repeats)
    return t_py, t_nb


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="200,500,1000")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba is not importable; nothing to compare")
        return 1
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)

    print(f"{'kernel':<12} {'n':>6} {'fallback':>12} {'numba':>12} {'speedup':>9}")
    for n in sizes:
        t_np, t_nb = bench_reduction(n, args.repeats, rng)
        print(f"{'reduction':<12} {n:>6} {t_np:>11.4f}s {t_nb:>11.4f}s {t_np / t_nb:>8.1f}x")
    for n in sizes:
        t_py, t_nb = bench_matching(n, args.repeats, rng)
        print(f"{'matching':<12} {n:>6} {t_py:>11.4f}s {t_nb:>11.4f}s {t_py / t_nb:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
