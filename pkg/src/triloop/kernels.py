"""RK4 integration kernels: numba-jitted hot path with a pure-numpy fallback.

The jitted kernel is the default.  Set the environment variable
``TRILOOP_DISABLE_NUMBA=1`` before import to force the numpy path (the
same selection happens automatically when numba is not importable).
``benchmarks/bench_rk4.py`` compares the two paths.

Both kernels integrate ``dpsi/dt = -i W(t) psi`` with the classical
fixed-step 4th-order Runge-Kutta scheme over Hamiltonians pre-evaluated
on the half-step grid ``t0, t0+dt/2, t0+dt, ...`` (shape (2n+1, d, d)).
"""

from __future__ import annotations

import os

import numpy as np


def rk4_states_numpy(w_half: np.ndarray, psi0: np.ndarray, dt: float) -> np.ndarray:
    """Reference numpy implementation; returns states of shape (n+1, d)."""
    n_steps = (w_half.shape[0] - 1) // 2
    psi = psi0.astype(np.complex128)
    out = np.empty((n_steps + 1, psi.size), dtype=np.complex128)
    out[0] = psi
    half = 0.5 * dt
    sixth = dt / 6.0
    for k in range(n_steps):
        w0 = w_half[2 * k]
        wm = w_half[2 * k + 1]
        w1 = w_half[2 * k + 2]
        k1 = -1j * (w0 @ psi)
        k2 = -1j * (wm @ (psi + half * k1))
        k3 = -1j * (wm @ (psi + half * k2))
        k4 = -1j * (w1 @ (psi + dt * k3))
        psi = psi + sixth * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        out[k + 1] = psi
    return out


def _rk4_loops(w_half, psi0, dt):
    # explicit loops: this is the numba-compiled hot kernel
    n_steps = (w_half.shape[0] - 1) // 2
    dim = psi0.shape[0]
    out = np.empty((n_steps + 1, dim), dtype=np.complex128)
    psi = psi0.astype(np.complex128)
    k1 = np.empty(dim, dtype=np.complex128)
    k2 = np.empty(dim, dtype=np.complex128)
    k3 = np.empty(dim, dtype=np.complex128)
    k4 = np.empty(dim, dtype=np.complex128)
    tmp = np.empty(dim, dtype=np.complex128)
    for i in range(dim):
        out[0, i] = psi[i]
    half = 0.5 * dt
    sixth = dt / 6.0
    for k in range(n_steps):
        w0 = w_half[2 * k]
        wm = w_half[2 * k + 1]
        w1 = w_half[2 * k + 2]
        for i in range(dim):
            acc = 0.0 + 0.0j
            for j in range(dim):
                acc += w0[i, j] * psi[j]
            k1[i] = -1j * acc
        for i in range(dim):
            tmp[i] = psi[i] + half * k1[i]
        for i in range(dim):
            acc = 0.0 + 0.0j
            for j in range(dim):
                acc += wm[i, j] * tmp[j]
            k2[i] = -1j * acc
        for i in range(dim):
            tmp[i] = psi[i] + half * k2[i]
        for i in range(dim):
            acc = 0.0 + 0.0j
            for j in range(dim):
                acc += wm[i, j] * tmp[j]
            k3[i] = -1j * acc
        for i in range(dim):
            tmp[i] = psi[i] + dt * k3[i]
        for i in range(dim):
            acc = 0.0 + 0.0j
            for j in range(dim):
                acc += w1[i, j] * tmp[j]
            k4[i] = -1j * acc
        for i in range(dim):
            psi[i] = psi[i] + sixth * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])
            out[k + 1, i] = psi[i]
    return out


NUMBA_DISABLED = os.environ.get("TRILOOP_DISABLE_NUMBA", "").strip().lower() in (
    "1", "true", "yes", "on",
)

rk4_states_jit = None
if not NUMBA_DISABLED:
    try:
        from numba import njit

        rk4_states_jit = njit(cache=True)(_rk4_loops)
    except ImportError:
        rk4_states_jit = None

NUMBA_ENABLED = rk4_states_jit is not None

rk4_states = rk4_states_jit if NUMBA_ENABLED else rk4_states_numpy
