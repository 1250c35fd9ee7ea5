"""Benchmark the numba-compiled integrand kernel against the numpy path.

Run: python benchmarks/bench_kernels.py
"""
import time

import numpy as np

from diracrates import _kernels


def bench(fn, dtau, reps=50):
    fn(dtau, 1.0, 0.01, 1.0, False)  # warm up / compile
    start = time.perf_counter()
    for _ in range(reps):
        fn(dtau, 1.0, 0.01, 1.0, False)
        fn(dtau, 1.0, 0.01, 1.0, True)
    return (time.perf_counter() - start) / (2 * reps)


def main():
    rng = np.random.default_rng(0)
    for n in (1_000, 10_000, 100_000):
        dtau = np.sort(rng.uniform(0.0, 12.0, size=n))
        t_np = bench(_kernels.bracket_integrand_numpy, dtau)
        line = f"n={n:>7d}  numpy {t_np * 1e3:8.3f} ms"
        if _kernels.bracket_integrand_numba is not None:
            t_nb = bench(_kernels.bracket_integrand_numba, dtau)
            line += f"  numba {t_nb * 1e3:8.3f} ms  speedup {t_np / t_nb:5.2f}x"
        else:
            line += "  (numba unavailable or disabled)"
        print(line)


if __name__ == "__main__":
    main()
