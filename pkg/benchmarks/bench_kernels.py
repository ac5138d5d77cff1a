"""Benchmarks the compiled kernels against the pure-numpy fallbacks.

Run as `python3 benchmarks/bench_kernels.py`.  Each kernel is timed on a
representative workload with both backends and the agreement of the results
is reported alongside the speedup.
"""

from __future__ import annotations

import time

import numpy as np

from dynmod import _kernels_numpy as knp

try:
    from dynmod import _kernels_numba as knb
except ImportError:
    knb = None


def _timeit(fn, *args, repeats=3):
    best = np.inf
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def _report(name, t_np, t_nb, agree):
    speedup = t_np / t_nb if t_nb > 0 else float("inf")
    print(f"{name:18s}  numpy {t_np*1e3:9.2f} ms   numba {t_nb*1e3:9.2f} ms"
          f"   speedup {speedup:6.1f}x   max|diff| {agree:.2e}")


def bench_rk4():
    args = (1.0, 0.0, 0.2, 2.0, 100.0, complex(2**-0.5), 200_000, 5e-4)
    t_np, (c_np, _) = _timeit(knp.rk4_amplitude, *args)
    knb.rk4_amplitude(*args[:6], 100, args[7])  # warm the jit cache
    t_nb, (c_nb, _) = _timeit(knb.rk4_amplitude, *args)
    _report("rk4_amplitude", t_np, t_nb, np.max(np.abs(c_np - c_nb)))


def bench_sensitivity():
    args = (1.0, 0.0, 0.2, 2.404, 200.0, complex(-1j * 2**-0.5), 200_000, 5e-4)
    t_np, (c_np, _, d_np, _) = _timeit(knp.rk4_sensitivity, *args)
    knb.rk4_sensitivity(*args[:6], 100, args[7])
    t_nb, (c_nb, _, d_nb, _) = _timeit(knb.rk4_sensitivity, *args)
    agree = max(np.max(np.abs(c_np - c_nb)), np.max(np.abs(d_np - d_nb)))
    _report("rk4_sensitivity", t_np, t_nb, agree)


def bench_volterra():
    args = (1.0, 0.0, 5.0, 2.0, 100.0, complex(2**-0.5), 4000, 2.5e-3)
    t_np, c_np = _timeit(knp.volterra_direct, *args)
    knb.volterra_direct(*args[:6], 100, args[7])
    t_nb, c_nb = _timeit(knb.volterra_direct, *args)
    _report("volterra_direct", t_np, t_nb, np.max(np.abs(c_np - c_nb)))


def bench_quadrature():
    omega = np.linspace(0.0, 300.0, 60_000)
    j = 5.0 / (2.0 * np.pi * ((omega - 31.0) ** 2 + 6.25))
    fw = np.ascontiguousarray(np.vstack((j, j * 0.3)))
    args = (omega, fw, 31.0, 0.01, 5000)
    t_np, k_np = _timeit(knp.kernel_quadrature, *args)
    knb.kernel_quadrature(omega, fw, 31.0, 0.01, 100)
    t_nb, k_nb = _timeit(knb.kernel_quadrature, *args)
    _report("kernel_quadrature", t_np, t_nb, np.max(np.abs(k_np - k_nb)))


def bench_history():
    n = 8000
    s = np.arange(n + 1) * 0.01
    kern = np.exp((-0.1 + 3.0j) * s)
    u = np.exp(1j * np.sin(30.0 * s))
    args = (kern, u, 0.01)
    t_np, g_np = _timeit(knp.history_coeffs, *args)
    knb.history_coeffs(kern[:100], u[:100], 0.01)
    t_nb, g_nb = _timeit(knb.history_coeffs, *args)
    _report("history_coeffs", t_np, t_nb, np.max(np.abs(g_np - g_nb)))


def main():
    if knb is None:
        print("numba backend unavailable; nothing to compare")
        return
    bench_rk4()
    bench_sensitivity()
    bench_volterra()
    bench_quadrature()
    bench_history()


if __name__ == "__main__":
    main()
