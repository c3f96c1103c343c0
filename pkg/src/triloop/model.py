"""Pulse envelopes, detunings, and the bare three-state loop Hamiltonian.

Conventions
-----------
All frequencies (Rabi peaks, detunings) are in units of ``1/T`` and all
times in units of ``T``, where ``T`` is the configured time unit; the
stored ``time_unit`` only labels outputs.  The assembled matrix ``W(t)``
already carries the one-half prefactor on the couplings, so the equation
of motion is ``dC/dt = -i W C`` with no extra factor:

    W = [[0,        P e^{+i phi_P}/2,  C/2            ],
         [.,        Delta_2,           S e^{+i phi_S}/2],
         [.,        .,                 Delta_3        ]]   (hermitian)

with real envelopes P, S, C.  The C field carries zero phase by
convention; element ``[0][0]`` is identically zero (global-phase gauge).
Envelopes may be signed: a negative value is the same Hamiltonian entry
as a positive envelope with the phase flipped by pi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import InvalidInputError, TableRangeError

PULSE_SHAPES = ("gaussian", "constant", "sum_of_gaussians", "tabulated", "synthesized")


@dataclass(frozen=True)
class GaussianTerm:
    """One gaussian envelope term  peak * exp(-((t - center)/width)^2)."""

    peak: float
    center: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise InvalidInputError(f"gaussian width must be > 0, got {self.width}")


def _eval_gaussians(terms, t):
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    for g in terms:
        out += g.peak * np.exp(-(((t - g.center) / g.width) ** 2))
    return out


def _eval_gaussians_dot(terms, t):
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    for g in terms:
        u = (t - g.center) / g.width
        out += g.peak * np.exp(-(u**2)) * (-2.0 * u / g.width)
    return out


def _interp_table(times, values, t, what: str):
    t = np.asarray(t, dtype=float)
    if np.any(t < times[0]) or np.any(t > times[-1]):
        raise TableRangeError(
            f"{what} evaluated outside tabulated range "
            f"[{times[0]}, {times[-1]}]"
        )
    return np.interp(t, times, values)


def _fd4(fn, t, h):
    """4th-order central finite difference."""
    t = np.asarray(t, dtype=float)
    return (fn(t - 2 * h) - 8 * fn(t - h) + 8 * fn(t + h) - fn(t + 2 * h)) / (12 * h)


@dataclass(frozen=True)
class Pulse:
    """A named real envelope with a constant phase.

    ``shape`` is one of gaussian | constant | sum_of_gaussians | tabulated |
    synthesized.  Synthesized pulses wrap a vectorized callable (used by the
    recipe module to impose the chain-breaking envelope); their values may be
    signed, which is equivalent to a pi phase flip on the constant phase.
    """

    shape: str
    phase: float = 0.0
    terms: tuple[GaussianTerm, ...] = ()
    value: float = 0.0
    table_t: tuple[float, ...] = ()
    table_v: tuple[float, ...] = ()
    fn: Callable | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.shape not in PULSE_SHAPES:
            raise InvalidInputError(f"unknown pulse shape {self.shape!r}")
        if self.shape == "tabulated":
            if len(self.table_t) < 2 or len(self.table_t) != len(self.table_v):
                raise InvalidInputError("tabulated pulse needs matching t/value lists")
            if np.any(np.diff(self.table_t) <= 0):
                raise InvalidInputError("tabulated times must be strictly increasing")
        if self.shape == "synthesized" and self.fn is None:
            raise InvalidInputError("synthesized pulse requires a callable")

    # -- constructors ---------------------------------------------------
    @staticmethod
    def gaussian(peak: float, center: float, width: float, phase: float = 0.0) -> "Pulse":
        return Pulse(shape="gaussian", phase=phase,
                     terms=(GaussianTerm(peak, center, width),))

    @staticmethod
    def constant(value: float, phase: float = 0.0) -> "Pulse":
        return Pulse(shape="constant", phase=phase, value=value)

    @staticmethod
    def sum_of_gaussians(terms, phase: float = 0.0) -> "Pulse":
        return Pulse(shape="sum_of_gaussians", phase=phase,
                     terms=tuple(GaussianTerm(*t) if not isinstance(t, GaussianTerm)
                                 else t for t in terms))

    @staticmethod
    def tabulated(times, values, phase: float = 0.0) -> "Pulse":
        return Pulse(shape="tabulated", phase=phase,
                     table_t=tuple(float(x) for x in times),
                     table_v=tuple(float(x) for x in values))

    @staticmethod
    def synthesized(fn: Callable, phase: float = 0.0) -> "Pulse":
        return Pulse(shape="synthesized", phase=phase, fn=fn)

    # -- evaluation -----------------------------------------------------
    def envelope(self, t):
        """Real (possibly signed) envelope value; vectorized over ``t``."""
        if self.shape in ("gaussian", "sum_of_gaussians"):
            return _eval_gaussians(self.terms, t)
        if self.shape == "constant":
            return np.full_like(np.asarray(t, dtype=float), self.value)
        if self.shape == "tabulated":
            return _interp_table(np.asarray(self.table_t), np.asarray(self.table_v),
                                 t, "tabulated pulse")
        return np.asarray(self.fn(np.asarray(t, dtype=float)), dtype=float)

    def envelope_dot(self, t, fd_step: float | None = None):
        """Time derivative of the envelope.

        Analytic for gaussian shapes and constants; tabulated and
        synthesized envelopes fall back to a 4th-order central difference
        (step: a tenth of the table spacing, or ``fd_step``).
        """
        if self.shape in ("gaussian", "sum_of_gaussians"):
            return _eval_gaussians_dot(self.terms, t)
        if self.shape == "constant":
            return np.zeros_like(np.asarray(t, dtype=float))
        if self.shape == "tabulated":
            h = fd_step if fd_step is not None else (self.table_t[1] - self.table_t[0]) / 10.0
            lo, hi = self.table_t[0], self.table_t[-1]
            # clamp stencil points into the table so edge queries stay legal
            return _fd4(lambda x: self.envelope(np.clip(x, lo, hi)), t, h)
        h = fd_step if fd_step is not None else 1e-4
        return _fd4(self.envelope, t, h)


def evaluate_pulse(pulse: Pulse, t):
    """Envelope value of ``pulse`` at time ``t`` (vectorized)."""
    return pulse.envelope(t)


@dataclass(frozen=True)
class Detuning:
    """A cumulative detuning: constant, sum of gaussian terms, or tabulated."""

    shape: str = "constant"
    value: float = 0.0
    terms: tuple[GaussianTerm, ...] = ()
    table_t: tuple[float, ...] = ()
    table_v: tuple[float, ...] = ()

    def __post_init__(self):
        if self.shape not in ("constant", "sum_of_gaussians", "tabulated"):
            raise InvalidInputError(f"unknown detuning shape {self.shape!r}")

    @staticmethod
    def constant(value: float) -> "Detuning":
        return Detuning(shape="constant", value=float(value))

    @staticmethod
    def sum_of_gaussians(terms) -> "Detuning":
        return Detuning(shape="sum_of_gaussians",
                        terms=tuple(GaussianTerm(*t) if not isinstance(t, GaussianTerm)
                                    else t for t in terms))

    @staticmethod
    def tabulated(times, values) -> "Detuning":
        return Detuning(shape="tabulated",
                        table_t=tuple(float(x) for x in times),
                        table_v=tuple(float(x) for x in values))

    def value_at(self, t):
        if self.shape == "constant":
            return np.full_like(np.asarray(t, dtype=float), self.value)
        if self.shape == "sum_of_gaussians":
            return _eval_gaussians(self.terms, t)
        return _interp_table(np.asarray(self.table_t), np.asarray(self.table_v),
                             t, "tabulated detuning")


@dataclass(frozen=True)
class DetuningSpec:
    delta2: Detuning = field(default_factory=Detuning)
    delta3: Detuning = field(default_factory=Detuning)

    @staticmethod
    def constants(delta2: float, delta3: float) -> "DetuningSpec":
        return DetuningSpec(Detuning.constant(delta2), Detuning.constant(delta3))


@dataclass(frozen=True)
class LoopConfig:
    """Full specification of the three-state loop drive."""

    pulse_p: Pulse
    pulse_s: Pulse
    pulse_c: Pulse
    detunings: DetuningSpec = field(default_factory=DetuningSpec)
    time_unit: float = 1.0

    def __post_init__(self):
        if abs(self.pulse_c.phase) > 1e-12:
            raise InvalidInputError("the C pulse phase is fixed to zero by convention")
        if not self.time_unit > 0:
            raise InvalidInputError("time unit must be positive")


def bare_hamiltonian_grid(cfg: LoopConfig, times) -> np.ndarray:
    """Loop Hamiltonian W(t) stacked over a time array, shape (n, 3, 3)."""
    t = np.atleast_1d(np.asarray(times, dtype=float))
    p = cfg.pulse_p.envelope(t)
    s = cfg.pulse_s.envelope(t)
    c = cfg.pulse_c.envelope(t)
    d2 = cfg.detunings.delta2.value_at(t)
    d3 = cfg.detunings.delta3.value_at(t)
    if not (np.all(np.isfinite(d2)) and np.all(np.isfinite(d3))):
        raise InvalidInputError("detunings must be finite on the grid")
    w = np.zeros((t.size, 3, 3), dtype=complex)
    w[:, 0, 1] = 0.5 * p * np.exp(1j * cfg.pulse_p.phase)
    w[:, 1, 0] = np.conj(w[:, 0, 1])
    w[:, 0, 2] = 0.5 * c
    w[:, 2, 0] = np.conj(w[:, 0, 2])
    w[:, 1, 2] = 0.5 * s * np.exp(1j * cfg.pulse_s.phase)
    w[:, 2, 1] = np.conj(w[:, 1, 2])
    w[:, 1, 1] = d2
    w[:, 2, 2] = d3
    return w


def bare_hamiltonian(cfg: LoopConfig, t: float) -> np.ndarray:
    """Hermitian 3x3 loop Hamiltonian at a single time."""
    return bare_hamiltonian_grid(cfg, [t])[0]
