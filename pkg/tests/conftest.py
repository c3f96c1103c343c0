import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for `import oracles`

from triloop import DetuningSpec, LoopConfig, Pulse


def random_loop_config(rng: np.random.Generator,
                       time_dependent_detunings: bool = False) -> LoopConfig:
    """Random gaussian pulses, phases, and detunings (units of 1/T and T)."""
    peaks = rng.uniform(0.3, 2.5, size=3)
    centers = rng.uniform(-1.0, 1.0, size=3)
    widths = rng.uniform(0.7, 1.6, size=3)
    phi_p, phi_s = rng.uniform(-np.pi, np.pi, size=2)
    if time_dependent_detunings:
        from triloop import Detuning, GaussianTerm
        det = DetuningSpec(
            Detuning.sum_of_gaussians(
                [GaussianTerm(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5), 1.0)]),
            Detuning.sum_of_gaussians(
                [GaussianTerm(rng.uniform(-1, 1), rng.uniform(-0.5, 0.5), 1.2)]),
        )
    else:
        det = DetuningSpec.constants(rng.uniform(-1, 1), rng.uniform(-1, 1))
    return LoopConfig(
        pulse_p=Pulse.gaussian(peaks[0], centers[0], widths[0], phase=phi_p),
        pulse_s=Pulse.gaussian(peaks[1], centers[1], widths[1], phase=phi_s),
        pulse_c=Pulse.gaussian(peaks[2], centers[2], widths[2]),
        detunings=det,
    )


def random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2


def assert_state_equiv(actual, expected, tol: float = 1e-10):
    """States equal up to a global phase (unit fidelity)."""
    a = np.asarray(actual, dtype=complex)
    b = np.asarray(expected, dtype=complex)
    fidelity = abs(np.vdot(b, a)) ** 2 / (np.linalg.norm(a) ** 2 * np.linalg.norm(b) ** 2)
    assert abs(fidelity - 1.0) < tol, f"states differ: fidelity = {fidelity}"


@pytest.fixture(scope="session")
def warm_kernel():
    """Trigger numba compilation once so timing tests see steady state."""
    import triloop as tl
    grid = tl.TimeGrid(-1.0, 1.0, 0.01)
    cfg = tl.preset("fig3").cfg
    tl.propagate(cfg, tl.basis_state(1), grid)
    return True
