"""Schrodinger propagation in the bare or Householder basis, plus observables.

Fixed-step RK4 (no adaptivity, no renormalization: norm drift is a quality
signal).  Time-dependent pulses and detunings are evaluated exactly at the
RK4 substage times, which preserves 4th-order accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AccuracyError, InvalidInputError
from .frame import frame_grid
from .kernels import rk4_states
from .model import LoopConfig, bare_hamiltonian_grid

BASES = ("bare", "householder")
NORM_DRIFT_LIMIT = 1e-6
MAX_STEPS = 10**7
_CHUNK_STEPS = 65536


@dataclass(frozen=True)
class TimeGrid:
    t_start: float
    t_end: float
    dt: float

    def __post_init__(self):
        if not self.dt > 0:
            raise InvalidInputError(f"dt must be positive, got {self.dt}")
        if self.t_end <= self.t_start:
            raise InvalidInputError("t_end must exceed t_start")
        if (self.t_end - self.t_start) / self.dt > MAX_STEPS:
            raise InvalidInputError(f"grid exceeds {MAX_STEPS} steps")

    @property
    def n_steps(self) -> int:
        return max(1, int(round((self.t_end - self.t_start) / self.dt)))

    def times(self) -> np.ndarray:
        return self.t_start + self.dt * np.arange(self.n_steps + 1)

    def half_times(self) -> np.ndarray:
        return self.t_start + 0.5 * self.dt * np.arange(2 * self.n_steps + 1)


@dataclass(frozen=True)
class StateVector:
    """Three complex amplitudes with a basis tag; unit norm at construction."""

    amplitudes: np.ndarray
    basis: str = "bare"

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (3,):
            raise InvalidInputError("state vector needs exactly 3 amplitudes")
        if self.basis not in BASES:
            raise InvalidInputError(f"unknown basis {self.basis!r}")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-9:
            raise InvalidInputError(f"state vector must have unit norm, got {norm!r}")
        object.__setattr__(self, "amplitudes", amps)


def basis_state(index: int, basis: str = "bare") -> StateVector:
    """Unit vector on bare state 1, 2 or 3 (1-based)."""
    if index not in (1, 2, 3):
        raise InvalidInputError(f"basis state index must be 1..3, got {index}")
    amps = np.zeros(3, dtype=complex)
    amps[index - 1] = 1.0
    return StateVector(amps, basis)


@dataclass(frozen=True)
class Trajectory:
    """Time grid, state snapshots, and derived observables of one propagation."""

    grid: TimeGrid
    basis: str
    times: np.ndarray
    states: np.ndarray                  # (n+1, 3) complex
    populations: np.ndarray             # (n+1, 3) in the trajectory's own basis
    spectator_population: np.ndarray    # |<3~|psi>|^2
    dark_population: np.ndarray         # |<dark|psi>|^2 (NaN where undefined)
    norm: np.ndarray
    norm_drift: float
    config: LoopConfig = field(repr=False, compare=False, default=None)

    @property
    def final_state(self) -> StateVector:
        amps = self.states[-1] / np.linalg.norm(self.states[-1])
        return StateVector(amps, self.basis)

    @property
    def final_populations(self) -> np.ndarray:
        return self.populations[-1]


def populations(psi: StateVector) -> tuple[float, float, float]:
    """(P1, P2, P3) = squared amplitude magnitudes."""
    p = np.abs(psi.amplitudes) ** 2
    return float(p[0]), float(p[1]), float(p[2])


def projection_population(psi: StateVector, target) -> float:
    """|<target|psi>|^2; both states must carry the same basis tag."""
    target_basis = getattr(target, "basis", "bare")
    if psi.basis != target_basis:
        raise InvalidInputError(
            f"basis mismatch: state is {psi.basis!r}, target is {target_basis!r}"
        )
    return float(abs(np.vdot(target.amplitudes, psi.amplitudes)) ** 2)


def _dark_population_arrays(chain_amps, otp, w12):
    """Dark-state population from Householder-frame amplitudes (vectorized)."""
    s_eff = 2.0 * w12
    denom2 = np.abs(s_eff) ** 2 + np.abs(otp) ** 2
    undefined = denom2 < 1e-28
    safe = np.sqrt(np.where(undefined, 1.0, denom2))
    overlap = (np.conj(s_eff) * chain_amps[:, 0]
               - otp * chain_amps[:, 2]) / safe
    pop = np.abs(overlap) ** 2
    return np.where(undefined, np.nan, pop)


def _finalize(cfg, grid, basis, states) -> Trajectory:
    times = grid.times()
    norms = np.linalg.norm(states, axis=1)
    drift = float(np.abs(norms - 1.0).max())
    arrays = frame_grid(cfg, times)
    if basis == "bare":
        chain = np.einsum("nij,nj->ni", arrays["reflections"], states)
    else:
        chain = states
    traj = Trajectory(
        grid=grid,
        basis=basis,
        times=times,
        states=states,
        populations=np.abs(states) ** 2,
        spectator_population=np.abs(chain[:, 2]) ** 2,
        dark_population=_dark_population_arrays(
            chain, arrays["omega_p_eff"], arrays["w12"]
        ),
        norm=norms,
        norm_drift=drift,
        config=cfg,
    )
    return traj


def propagate(cfg: LoopConfig, psi0: StateVector, grid: TimeGrid,
              basis: str = "bare") -> Trajectory:
    """Integrate dC/dt = -i W C (bare) or dC~/dt = -i W~ C~ (householder).

    Raises :class:`AccuracyError` when the norm drift exceeds 1e-6; reduce
    ``dt`` in that case.
    """
    if basis not in BASES:
        raise InvalidInputError(f"unknown basis {basis!r}")
    if psi0.basis != basis:
        raise InvalidInputError(
            f"initial state is tagged {psi0.basis!r}, requested basis {basis!r}"
        )
    n = grid.n_steps
    psi = psi0.amplitudes.astype(np.complex128)
    pieces = [psi[None, :]]
    done = 0
    while done < n:
        count = min(_CHUNK_STEPS, n - done)
        t0 = grid.t_start + done * grid.dt
        half = t0 + 0.5 * grid.dt * np.arange(2 * count + 1)
        if basis == "bare":
            w_half = bare_hamiltonian_grid(cfg, half)
        else:
            w_half = frame_grid(cfg, half)["wtilde"]
        chunk = rk4_states(w_half, psi, grid.dt)
        pieces.append(chunk[1:])
        psi = chunk[-1]
        done += count
    states = np.concatenate(pieces, axis=0)
    traj = _finalize(cfg, grid, basis, states)
    if traj.norm_drift > NORM_DRIFT_LIMIT:
        raise AccuracyError(
            f"norm drift {traj.norm_drift:.3e} exceeds {NORM_DRIFT_LIMIT:.0e}; "
            f"reduce dt (currently {grid.dt})"
        )
    return traj


def transform_trajectory(traj: Trajectory, cfg: LoopConfig | None = None) -> Trajectory:
    """Apply the reflection R(t) pointwise, flipping the basis tag.

    R is involutary, so transforming twice recovers the original trajectory.
    """
    cfg = cfg if cfg is not None else traj.config
    if cfg is None:
        raise InvalidInputError("transform_trajectory needs the loop config")
    refl = frame_grid(cfg, traj.times)["reflections"]
    states = np.einsum("nij,nj->ni", refl, traj.states)
    new_basis = "householder" if traj.basis == "bare" else "bare"
    return _finalize(cfg, traj.grid, new_basis, states)
