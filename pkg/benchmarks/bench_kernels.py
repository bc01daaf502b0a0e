"""Compare the numba and numpy kernel backends on realistic workloads.

Run:  python3 benchmarks/bench_kernels.py [--cutoff N] [--repeat R]

JIT compilation is triggered by a warmup call per kernel, so the timings
reflect steady-state throughput.  Results also cross-check the two backends
against each other and fail loudly on disagreement beyond float noise.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from mzvlab.kernels import as_ks, get_backend


def _time(fn, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cutoff", type=int, default=2**20)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    npb = get_backend("numpy")
    nbb = get_backend("numba")
    n = args.cutoff
    deep = as_ks((1, 2, 1, 1, 3))
    cases = [
        ("zeta_partial (1,2)", "zeta_partial", (as_ks((1, 2)), n)),
        ("zeta_partial deep", "zeta_partial", (deep, n)),
        ("zeta_level_sums deep", "zeta_level_sums", (deep, n)),
        ("star_partial deep", "star_partial", (deep, n)),
        ("c1_table (1,2,2)", "c1_table", (as_ks((1, 2, 2)), n // 16)),
        ("c2_table (1,2,2)", "c2_table", (as_ks((1, 2, 2)), n // 16)),
        ("a1_table (1,2)", "a1_table", (as_ks((1, 2)), n // 16)),
        ("kawashima_f deep", "kawashima_f_eval", (deep, 0.5, n // 16)),
    ]

    print(f"cutoff {n}, best of {args.repeat}")
    print(f"{'kernel':24} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for label, name, call_args in cases:
        f_np = getattr(npb, name)
        f_nb = getattr(nbb, name)
        a = f_np(*call_args)
        b = f_nb(*call_args)  # warmup also compiles
        scale = np.max(np.abs(np.atleast_1d(a))) or 1.0
        if not np.allclose(a, b, rtol=1e-10, atol=1e-12 * scale):
            raise SystemExit(f"backend mismatch on {label}: {a!r} vs {b!r}")
        t_np = _time(f_np, call_args, args.repeat)
        t_nb = _time(f_nb, call_args, args.repeat)
        print(f"{label:24} {t_np * 1e3:9.2f}ms {t_nb * 1e3:9.2f}ms {t_np / t_nb:7.2f}x")


if __name__ == "__main__":
    main()
