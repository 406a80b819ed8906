"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each kernel is warmed up once under numba so compile time is excluded.
Results from both backends are compared before any timing is reported.
"""
from __future__ import annotations

import argparse
import time

from densitylab import _accel, _kernels
from densitylab.constructions import build_Kst_pattern
from densitylab.counting import M, left_star
from densitylab.oracle import random_colored_host, random_ordered_graph


def cases():
    G = random_ordered_graph(60, 0.5, 1)
    H = random_colored_host(30, 3, 2)
    P = build_Kst_pattern(2, 3)
    return [
        ("ordered M, n=60", _kernels.ordered_pattern_count, (G.adj, M.required())),
        ("left 3-star, n=60", _kernels.ordered_pattern_count, (G.adj, left_star(3).required())),
        ("extremes n=6 m=7 k=3", _kernels.left_star_extremes, (6, 7, 3)),
        ("extremes n=7 m=6 k=2", _kernels.left_star_extremes, (7, 6, 2)),
        ("K'_2,3 copies, n=30", _kernels.colored_copy_count, (H.color, P.color, 3)),
    ]


def best_time(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def summary(out):
    # left_star_extremes returns a tuple with witness arrays
    return out[:2] if isinstance(out, tuple) else out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if not _accel.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    saved = _accel.USE_NUMBA
    print(f"{'kernel':<24}{'numba s':>11}{'numpy s':>11}{'speedup':>9}")
    try:
        for name, fn, fargs in cases():
            _accel.USE_NUMBA = True
            fn(*fargs)
            t_nb, out_nb = best_time(fn, fargs, args.repeat)
            _accel.USE_NUMBA = False
            t_np, out_np = best_time(fn, fargs, args.repeat)
            if summary(out_nb) != summary(out_np):
                raise SystemExit(f"{name}: backends disagree ({summary(out_nb)} vs {summary(out_np)})")
            print(f"{name:<24}{t_nb:>11.4f}{t_np:>11.4f}{t_np / t_nb:>8.1f}x")
    finally:
        _accel.USE_NUMBA = saved


if __name__ == "__main__":
    main()
