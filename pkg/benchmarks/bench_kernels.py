#!/usr/bin/env python3
"""Benchmark the jitted counting kernels against the numpy fallbacks.

Two regimes matter: one mid-size graph (all-pairs BFS and the distance-
regularity scan dominate) and a stream of small graphs (per-call overhead
dominates, the `filter` hot path).  Run:

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time

import numpy as np

from dezakit import _kernels
from dezakit.graphs import Graph


def _random_regularish(rng: random.Random, n: int, p: float) -> np.ndarray:
    a = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                a[u, v] = a[v, u] = 1
    Graph(a)  # validate
    return a


def _time(fn, *args, repeat=5) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    if not _kernels.HAVE_NUMBA:
        print("numba is not importable; nothing to compare")
        return

    from dezakit.families import johnson

    rng = random.Random(7)
    big = _random_regularish(rng, 200, 0.15)
    small = [_random_regularish(rng, rng.randint(8, 16), 0.5) for _ in range(400)]
    # a distance-regular instance so the intersection scan runs in full
    drg = johnson(9, 3).adj
    drg_dist = _kernels._distances_numpy(drg)
    drg_diameter = int(drg_dist.max())

    # warm up the JIT so compilation is not measured
    _kernels._distances_jit(small[0])
    _kernels._pair_values_jit(small[0])
    _kernels._class_values_jit(small[0])
    _kernels._triangles_jit(small[0])
    _kernels._intersection_jit(drg, drg_dist, drg_diameter)

    def stream(fn):
        def run():
            for adj in small:
                fn(adj)

        return run

    cases = [
        ("all-pairs distances, n=200", lambda: _kernels._distances_jit(big),
         lambda: _kernels._distances_numpy(big)),
        ("intersection counts, J(9,3)",
         lambda: _kernels._intersection_jit(drg, drg_dist, drg_diameter),
         lambda: _kernels._intersection_numpy(drg, drg_dist, drg_diameter)),
        ("triangles, n=200", lambda: _kernels._triangles_jit(big),
         lambda: _kernels._triangles_numpy(big)),
        ("pair values, 400 small graphs", stream(_kernels._pair_values_jit),
         stream(_kernels._pair_values_numpy)),
        ("class values, 400 small graphs", stream(_kernels._class_values_jit),
         stream(_kernels._class_values_numpy)),
        ("distances, 400 small graphs", stream(_kernels._distances_jit),
         stream(_kernels._distances_numpy)),
    ]

    print(f"{'kernel':<34} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, jit_fn, np_fn in cases:
        t_jit = _time(jit_fn)
        t_np = _time(np_fn)
        print(f"{name:<34} {t_jit * 1e3:>8.2f}ms {t_np * 1e3:>8.2f}ms "
              f"{t_np / t_jit:>7.1f}x")


if __name__ == "__main__":
    main()
