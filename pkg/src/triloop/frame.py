"""The time-dependent Householder frame of the three-state loop.

A reflection about the axis set by the P/C pulse ratio maps the loop
linkage onto a nearest-neighbour chain.  This module provides the mixing
angle, the reflection matrix, the transformed (chain) Hamiltonian in
closed form, the rotated basis states, and the dark state of the
resonant chain.

Amplitude convention: Householder-frame amplitudes are ``C~ = R C``
where ``C`` are bare amplitudes.  Basis states are stored as bare-basis
ket amplitudes, i.e. the columns of ``R``; a projection
``|<state|psi>|^2`` therefore equals the corresponding ``|C~|^2``
component.  This is the pairing validated operationally by the
cross-basis propagation tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateAngleError, DegenerateDarkStateError, InvalidInputError
from .model import LoopConfig

DEGENERATE_ENVELOPE_TOL = 1e-14


class MixingAngle(NamedTuple):
    theta: float
    theta_dot: float


@dataclass(frozen=True)
class BasisState:
    """A labelled unit-norm state, stored as bare-basis ket amplitudes."""

    label: str
    amplitudes: np.ndarray
    basis: str = "bare"

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (3,):
            raise InvalidInputError("basis state needs exactly 3 amplitudes")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > 1e-12:
            raise InvalidInputError(f"basis state must have unit norm, got {norm!r}")
        object.__setattr__(self, "amplitudes", amps)


@dataclass(frozen=True)
class FrameSnapshot:
    """All Householder-frame quantities at one instant."""

    t: float
    theta: float
    theta_dot: float
    reflection: np.ndarray           # R, 3x3 hermitian unitary
    wtilde: np.ndarray               # chain Hamiltonian, 3x3 hermitian
    delta2_eff: float
    delta3_eff: float
    omega_p_eff: complex             # coupling 1 <-> 2~ (times 1/2 in wtilde)
    omega_s_eff: complex             # bare-S contribution to the 2~ <-> 3~ coupling
    omega_rms: float                 # sqrt(P^2 + C^2)


def _envelopes_pc(cfg: LoopConfig, t):
    t = np.asarray(t, dtype=float)
    return cfg.pulse_p.envelope(t), cfg.pulse_c.envelope(t)


def _theta_arrays(cfg: LoopConfig, times):
    """theta and theta_dot over a grid, freezing theta where both envelopes vanish.

    Returns (theta, theta_dot, degenerate_mask).  Raises only if the angle
    is undefined on the entire grid.
    """
    t = np.atleast_1d(np.asarray(times, dtype=float))
    p, c = _envelopes_pc(cfg, t)
    om2 = p * p + c * c
    mask = om2 < DEGENERATE_ENVELOPE_TOL**2
    theta = np.arctan2(c, p)
    dp = cfg.pulse_p.envelope_dot(t)
    dc = cfg.pulse_c.envelope_dot(t)
    with np.errstate(divide="ignore", invalid="ignore"):
        theta_dot = np.where(mask, 0.0, (dc * p - dp * c) / np.where(mask, 1.0, om2))
    if mask.all():
        raise DegenerateAngleError(
            "mixing angle undefined: P and C envelopes vanish on the whole grid"
        )
    if mask.any():
        # freeze theta at the nearest defined grid value
        idx = np.arange(t.size)
        defined = np.where(~mask, idx, -1)
        np.maximum.accumulate(defined, out=defined)
        first = int(np.argmax(~mask))
        defined[defined < 0] = first
        theta = theta[defined]
    return theta, theta_dot, mask


def mixing_angle(cfg: LoopConfig, t: float) -> MixingAngle:
    """Mixing angle theta = atan2(C, P) in [0, pi/2] and its time derivative.

    Raises :class:`DegenerateAngleError` when both envelopes vanish at ``t``;
    grid-based evaluation inside the propagator freezes the angle instead.
    """
    p, c = _envelopes_pc(cfg, t)
    p, c = float(p), float(c)
    if p * p + c * c < DEGENERATE_ENVELOPE_TOL**2:
        raise DegenerateAngleError(f"both P and C envelopes vanish at t = {t}")
    theta = float(np.arctan2(c, p))
    dp = float(cfg.pulse_p.envelope_dot(t))
    dc = float(cfg.pulse_c.envelope_dot(t))
    theta_dot = (dc * p - dp * c) / (p * p + c * c)
    return MixingAngle(theta, theta_dot)


def reflection_matrix(theta: float, phi_p: float) -> np.ndarray:
    """The loop-breaking Householder reflection for a given mixing angle."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [[1.0, 0.0, 0.0],
         [0.0, c, np.exp(-1j * phi_p) * s],
         [0.0, np.exp(1j * phi_p) * s, -c]],
        dtype=complex,
    )


def loop_householder_vector(theta: float, phi_p: float) -> np.ndarray:
    """Unit vector v with I - 2|v><v| equal to :func:`reflection_matrix`."""
    return np.array(
        [0.0, np.sin(theta / 2) * np.exp(-1j * phi_p), -np.cos(theta / 2)],
        dtype=complex,
    )


def _frame_arrays(cfg: LoopConfig, times):
    """Vectorized frame quantities over a time array.

    Returns a dict with theta, theta_dot, delta2_eff, delta3_eff,
    omega_p_eff, omega_s_eff, w12 (the full 2~ <-> 3~ element of wtilde),
    omega_rms, reflections (n,3,3) and wtilde (n,3,3).
    """
    t = np.atleast_1d(np.asarray(times, dtype=float))
    theta, theta_dot, mask = _theta_arrays(cfg, t)
    p, c = _envelopes_pc(cfg, t)
    s = cfg.pulse_s.envelope(t)
    d2 = cfg.detunings.delta2.value_at(t)
    d3 = cfg.detunings.delta3.value_at(t)
    fp, fs = cfg.pulse_p.phase, cfg.pulse_s.phase
    om2 = p * p + c * c
    om = np.sqrt(om2)
    safe = np.where(mask, 1.0, om2)
    cos_sum = np.cos(fp + fs)
    d2t = np.where(mask, d2, (d3 * c * c + d2 * p * p + p * c * s * cos_sum) / safe)
    d3t = np.where(mask, d3, (d2 * c * c + d3 * p * p - p * c * s * cos_sum) / safe)
    otp = np.exp(1j * fp) * om
    ots_num = (2.0 * np.exp(-1j * fp) * (d2 - d3) * p * c
               + (np.exp(-2j * (fp + fs)) * c * c - p * p) * np.exp(1j * fs) * s)
    ots = np.where(mask, 0.0, ots_num / safe)
    w12 = 0.5 * (ots - 2j * np.exp(-1j * fp) * theta_dot)

    ct, st = np.cos(theta), np.sin(theta)
    n = t.size
    refl = np.zeros((n, 3, 3), dtype=complex)
    refl[:, 0, 0] = 1.0
    refl[:, 1, 1] = ct
    refl[:, 2, 2] = -ct
    refl[:, 1, 2] = np.exp(-1j * fp) * st
    refl[:, 2, 1] = np.exp(1j * fp) * st

    wt = np.zeros((n, 3, 3), dtype=complex)
    wt[:, 0, 1] = 0.5 * otp
    wt[:, 1, 0] = np.conj(wt[:, 0, 1])
    wt[:, 1, 1] = d2t
    wt[:, 2, 2] = d3t
    wt[:, 1, 2] = w12
    wt[:, 2, 1] = np.conj(w12)

    return {
        "t": t, "theta": theta, "theta_dot": theta_dot,
        "delta2_eff": d2t, "delta3_eff": d3t,
        "omega_p_eff": otp, "omega_s_eff": ots, "w12": w12,
        "omega_rms": om, "reflections": refl, "wtilde": wt,
        "degenerate": mask,
    }


def frame_grid(cfg: LoopConfig, times) -> dict:
    """Public vectorized frame evaluation (see :func:`frame_snapshot`)."""
    return _frame_arrays(cfg, times)


def frame_snapshot(cfg: LoopConfig, t: float) -> FrameSnapshot:
    """Householder-frame quantities at time ``t``.

    The chain Hamiltonian is assembled from the closed-form effective
    detunings and couplings; tests assert it equals the directly computed
    ``R W R - i R dR/dt``.  Raises :class:`DegenerateAngleError` when the
    mixing angle is undefined at ``t``.
    """
    mixing_angle(cfg, t)  # strict degeneracy check at the query time
    arrays = _frame_arrays(cfg, [t])
    return FrameSnapshot(
        t=float(t),
        theta=float(arrays["theta"][0]),
        theta_dot=float(arrays["theta_dot"][0]),
        reflection=arrays["reflections"][0],
        wtilde=arrays["wtilde"][0],
        delta2_eff=float(arrays["delta2_eff"][0]),
        delta3_eff=float(arrays["delta3_eff"][0]),
        omega_p_eff=complex(arrays["omega_p_eff"][0]),
        omega_s_eff=complex(arrays["omega_s_eff"][0]),
        omega_rms=float(arrays["omega_rms"][0]),
    )


def householder_states(theta: float, phi_p: float) -> tuple[BasisState, BasisState, BasisState]:
    """The rotated basis (columns of R) as bare-basis ket amplitudes."""
    r = reflection_matrix(theta, phi_p)
    return (
        BasisState("1", r[:, 0]),
        BasisState("2~", r[:, 1]),
        BasisState("3~", r[:, 2]),
    )


def spectator_state(theta: float, phi_p: float) -> BasisState:
    """The chain end state 3~; its population is trapped when the chain breaks."""
    state = householder_states(theta, phi_p)[2]
    return BasisState("spectator", state.amplitudes)


def dark_state(snapshot: FrameSnapshot) -> BasisState:
    """Zero-eigenvalue superposition of the resonant chain, in bare amplitudes.

    For the chain with vanishing end-to-end detuning this is the state
    immune to the drive: it has no 2~ component and mixes state 1 with 3~
    by the ratio of the effective couplings (all three bare states in
    general).  The construction is the instantaneous null vector of the
    chain Hamiltonian restricted to zero end detuning; its first nonzero
    chain component is normalized to be real positive.
    """
    s_eff = 2.0 * snapshot.wtilde[1, 2]
    otp = snapshot.omega_p_eff
    if abs(s_eff) < DEGENERATE_ENVELOPE_TOL and abs(otp) < DEGENERATE_ENVELOPE_TOL:
        raise DegenerateDarkStateError("both effective couplings vanish")
    chain = np.array([s_eff, 0.0, -np.conj(otp)], dtype=complex)
    chain /= np.linalg.norm(chain)
    lead = chain[0] if abs(chain[0]) > 1e-15 else chain[2]
    chain *= np.conj(lead) / abs(lead)
    bare = snapshot.reflection @ chain
    return BasisState("dark", bare)
