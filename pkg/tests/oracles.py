"""Independent oracles used to cross-check the package.

These deliberately avoid the code paths they validate: the eigenvalue
oracle goes through the characteristic polynomial instead of Householder
reflections or LAPACK's tridiagonal path, and the reference integrator
evaluates callables step by step instead of the package's precomputed
half-grid kernels.
"""

from __future__ import annotations

import numpy as np


def charpoly_eigenvalues(h: np.ndarray) -> np.ndarray:
    """Sorted real eigenvalues of a hermitian matrix via its characteristic
    polynomial (Faddeev-LeVerrier coefficients, companion-matrix roots)."""
    n = h.shape[0]
    scale = np.linalg.norm(h, ord="fro")
    if scale == 0.0:
        return np.zeros(n)
    a = np.asarray(h, dtype=complex) / scale
    coeffs = [1.0 + 0.0j]
    m = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        am = a @ m
        ck = -np.trace(am) / k
        coeffs.append(ck)
        m = am + ck * np.eye(n, dtype=complex)
    roots = np.roots(np.array(coeffs))
    return np.sort(roots.real) * scale


def rk4_reference(wfun, psi0, t_start: float, t_end: float, dt: float) -> np.ndarray:
    """Callable-based RK4 for dpsi/dt = -i W(t) psi; returns (n+1, d) states."""
    n = int(round((t_end - t_start) / dt))
    psi = np.asarray(psi0, dtype=complex).copy()
    out = np.empty((n + 1, psi.size), dtype=complex)
    out[0] = psi
    t = t_start
    for k in range(n):
        k1 = -1j * (wfun(t) @ psi)
        k2 = -1j * (wfun(t + dt / 2) @ (psi + dt / 2 * k1))
        k3 = -1j * (wfun(t + dt / 2) @ (psi + dt / 2 * k2))
        k4 = -1j * (wfun(t + dt) @ (psi + dt * k3))
        psi = psi + dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        t = t_start + (k + 1) * dt
        out[k + 1] = psi
    return out


def resonant_rabi_p2(omega: float, t) -> np.ndarray:
    """Population of the driven state under a constant resonant drive."""
    return np.sin(0.5 * omega * np.asarray(t)) ** 2


def fd4(fn, t, h: float):
    """4th-order central finite difference of a (matrix-valued) function."""
    return (fn(t - 2 * h) - 8 * fn(t - h) + 8 * fn(t + h) - fn(t + 2 * h)) / (12 * h)
