"""Benchmark the jitted RK4 kernel against the pure-numpy fallback.

Usage: python benchmarks/bench_rk4.py [n_steps]

Both paths integrate the strongest bundled scenario over the same
precomputed half-step Hamiltonian grid, so the comparison isolates the
kernel itself.
"""

import sys
import time

import numpy as np

from triloop import preset
from triloop.kernels import rk4_states_jit, rk4_states_numpy
from triloop.model import bare_hamiltonian_grid


def timeit(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    n_steps = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
    cfg = preset("fig5").cfg
    dt = 10.0 / n_steps
    half = -5.0 + 0.5 * dt * np.arange(2 * n_steps + 1)
    w_half = bare_hamiltonian_grid(cfg, half)
    psi0 = np.array([1.0, 0.0, 0.0], dtype=complex)

    t_numpy = timeit(rk4_states_numpy, w_half, psi0, dt)
    print(f"numpy fallback : {t_numpy * 1e3:9.2f} ms  "
          f"({n_steps / t_numpy / 1e6:.2f} Msteps/s)")

    if rk4_states_jit is None:
        print("numba path unavailable (TRILOOP_DISABLE_NUMBA set or numba missing)")
        return

    rk4_states_jit(w_half[:3], psi0, dt)  # compile outside the timer
    t_jit = timeit(rk4_states_jit, w_half, psi0, dt)
    print(f"numba @njit    : {t_jit * 1e3:9.2f} ms  "
          f"({n_steps / t_jit / 1e6:.2f} Msteps/s)")
    print(f"speedup        : {t_numpy / t_jit:9.1f}x")

    a = rk4_states_numpy(w_half, psi0, dt)
    b = rk4_states_jit(w_half, psi0, dt)
    print(f"path agreement : {np.abs(a - b).max():.3e} max |difference|")


if __name__ == "__main__":
    main()
