import subprocess
import sys

import numpy as np

from triloop import kernels


def _half_grid_problem(n_steps=400, dim=3, seed=0):
    rng = np.random.default_rng(seed)
    base = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    base = (base + base.conj().T) / 2
    mod = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    mod = (mod + mod.conj().T) / 2
    ts = 0.5 * 1e-2 * np.arange(2 * n_steps + 1)
    w = base[None] + np.sin(ts)[:, None, None] * mod[None]
    psi0 = np.zeros(dim, dtype=complex)
    psi0[0] = 1.0
    return w, psi0


def test_numpy_and_jit_paths_agree():
    if kernels.rk4_states_jit is None:
        import pytest
        pytest.skip("numba unavailable or disabled")
    w, psi0 = _half_grid_problem()
    a = kernels.rk4_states_numpy(w, psi0, 1e-2)
    b = kernels.rk4_states_jit(w, psi0, 1e-2)
    assert np.abs(a - b).max() < 1e-13


def test_env_flag_selects_numpy_path():
    code = (
        "import os; os.environ['TRILOOP_DISABLE_NUMBA'] = '1'; "
        "from triloop import kernels; "
        "assert not kernels.NUMBA_ENABLED; "
        "assert kernels.rk4_states is kernels.rk4_states_numpy"
    )
    subprocess.run([sys.executable, "-c", code], check=True)


def test_default_path_is_jitted_when_available():
    assert kernels.NUMBA_ENABLED == (kernels.rk4_states_jit is not None)
