"""Config-file schema: parse, dump, and override loop scenarios.

The format is INI-style key/value text (see README for the full schema):

    [scenario]  name
    [time]      unit
    [grid]      t_start, t_end, dt
    [initial]   basis, amplitudes (comma-separated a+bi entries, normalized)
    [pulse.P] / [pulse.S] / [pulse.C]
                shape = gaussian | constant | sum_of_gaussians | tabulated
                        | chain_break   (S only: synthesized from P and C)
                peak/center/width, value, terms, times/values, phase
    [detuning]  delta2, delta3 as constants, or *_terms gaussian lists,
                or *_times / *_values tables

Overrides use dotted keys, e.g. ``grid.dt=0.0005`` or ``pulse.P.peak=0.8``,
and must reference keys present in the effective config.
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass

import numpy as np

from .errors import ConfigError
from .model import Detuning, DetuningSpec, GaussianTerm, LoopConfig, Pulse
from .propagate import StateVector, TimeGrid
from .recipes import ScenarioPreset, synthesize_chain_breaking_S


@dataclass(frozen=True)
class Scenario:
    name: str
    cfg: LoopConfig
    grid: TimeGrid
    initial_state: StateVector


ConfigDict = dict[str, dict[str, str]]


def _parse_complex(token: str) -> complex:
    try:
        return complex(token.strip().replace("i", "j").replace("I", "j"))
    except ValueError as exc:
        raise ConfigError(f"cannot parse complex value {token!r}") from exc


def _parse_float(section: str, key: str, raw: str) -> float:
    try:
        return float(raw)
    except ValueError as exc:
        raise ConfigError(f"[{section}] {key}: expected a number, got {raw!r}") from exc


def _parse_float_list(section: str, key: str, raw: str) -> list[float]:
    try:
        return [float(x) for x in raw.split(",") if x.strip()]
    except ValueError as exc:
        raise ConfigError(f"[{section}] {key}: expected comma-separated numbers") from exc


def _parse_terms(section: str, raw: str) -> list[GaussianTerm]:
    terms = []
    for chunk in raw.split(";"):
        if not chunk.strip():
            continue
        parts = [x.strip() for x in chunk.split(",")]
        if len(parts) != 3:
            raise ConfigError(
                f"[{section}] terms: each term needs 'peak,center,width', got {chunk!r}"
            )
        terms.append(GaussianTerm(*(float(x) for x in parts)))
    if not terms:
        raise ConfigError(f"[{section}] terms: empty term list")
    return terms


def text_to_dict(text: str) -> ConfigDict:
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str  # keep key case
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"config parse error: {exc}") from exc
    return {section: dict(parser.items(section)) for section in parser.sections()}


def _get(conf: ConfigDict, section: str, key: str, default: str | None = None) -> str:
    if section not in conf:
        if default is not None:
            return default
        raise ConfigError(f"missing section [{section}]")
    if key not in conf[section]:
        if default is not None:
            return default
        raise ConfigError(f"[{section}] missing key {key!r}")
    return conf[section][key]


def _build_pulse(conf: ConfigDict, section: str, allow_chain_break: bool) -> Pulse | None:
    if section not in conf:
        raise ConfigError(f"missing section [{section}]")
    shape = _get(conf, section, "shape")
    phase = _parse_float(section, "phase", _get(conf, section, "phase", "0.0"))
    if shape == "gaussian":
        return Pulse.gaussian(
            peak=_parse_float(section, "peak", _get(conf, section, "peak")),
            center=_parse_float(section, "center", _get(conf, section, "center")),
            width=_parse_float(section, "width", _get(conf, section, "width")),
            phase=phase,
        )
    if shape == "constant":
        return Pulse.constant(
            _parse_float(section, "value", _get(conf, section, "value")), phase=phase
        )
    if shape == "sum_of_gaussians":
        return Pulse.sum_of_gaussians(
            _parse_terms(section, _get(conf, section, "terms")), phase=phase
        )
    if shape == "tabulated":
        times = _parse_float_list(section, "times", _get(conf, section, "times"))
        values = _parse_float_list(section, "values", _get(conf, section, "values"))
        return Pulse.tabulated(times, values, phase=phase)
    if shape == "chain_break":
        if not allow_chain_break:
            raise ConfigError(f"[{section}] shape chain_break is only valid for pulse.S")
        return None  # synthesized later from P and C
    raise ConfigError(f"[{section}] unknown shape {shape!r}")


def _build_detuning(conf: ConfigDict, key: str) -> Detuning:
    section = "detuning"
    sec = conf.get(section, {})
    if f"{key}_terms" in sec:
        return Detuning.sum_of_gaussians(_parse_terms(section, sec[f"{key}_terms"]))
    if f"{key}_times" in sec or f"{key}_values" in sec:
        times = _parse_float_list(section, f"{key}_times",
                                  _get(conf, section, f"{key}_times"))
        values = _parse_float_list(section, f"{key}_values",
                                   _get(conf, section, f"{key}_values"))
        if len(times) != len(values):
            raise ConfigError(f"[{section}] {key}: times/values length mismatch")
        return Detuning.tabulated(times, values)
    return Detuning.constant(_parse_float(section, key, _get(conf, section, key, "0.0")))


def dict_to_scenario(conf: ConfigDict) -> Scenario:
    name = _get(conf, "scenario", "name", "custom")
    time_unit = _parse_float("time", "unit", _get(conf, "time", "unit", "1.0"))

    grid = TimeGrid(
        t_start=_parse_float("grid", "t_start", _get(conf, "grid", "t_start")),
        t_end=_parse_float("grid", "t_end", _get(conf, "grid", "t_end")),
        dt=_parse_float("grid", "dt", _get(conf, "grid", "dt")),
    )

    pulse_p = _build_pulse(conf, "pulse.P", allow_chain_break=False)
    pulse_c = _build_pulse(conf, "pulse.C", allow_chain_break=False)
    pulse_s = _build_pulse(conf, "pulse.S", allow_chain_break=True)

    detunings = DetuningSpec(_build_detuning(conf, "delta2"),
                             _build_detuning(conf, "delta3"))

    if pulse_s is None:  # chain_break: synthesize from P and C
        phase_raw = conf["pulse.S"].get("phase")
        base = LoopConfig(pulse_p=pulse_p, pulse_s=Pulse.constant(0.0),
                          pulse_c=pulse_c, detunings=detunings,
                          time_unit=time_unit)
        cfg = synthesize_chain_breaking_S(base, grid)
        if phase_raw is not None:
            cfg = LoopConfig(
                pulse_p=cfg.pulse_p,
                pulse_s=Pulse.synthesized(cfg.pulse_s.fn,
                                          phase=_parse_float("pulse.S", "phase",
                                                             phase_raw)),
                pulse_c=cfg.pulse_c, detunings=cfg.detunings,
                time_unit=time_unit,
            )
    else:
        cfg = LoopConfig(pulse_p=pulse_p, pulse_s=pulse_s, pulse_c=pulse_c,
                         detunings=detunings, time_unit=time_unit)

    basis = _get(conf, "initial", "basis", "bare")
    tokens = _get(conf, "initial", "amplitudes", "1, 0, 0").split(",")
    if len(tokens) != 3:
        raise ConfigError("[initial] amplitudes: exactly 3 entries required")
    amps = np.array([_parse_complex(tok) for tok in tokens])
    norm = np.linalg.norm(amps)
    if norm < 1e-12:
        raise ConfigError("[initial] amplitudes must not all vanish")
    initial = StateVector(amps / norm, basis)

    return Scenario(name=name, cfg=cfg, grid=grid, initial_state=initial)


def parse_config(text: str) -> Scenario:
    return dict_to_scenario(text_to_dict(text))


def load_config(path) -> Scenario:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def apply_overrides(conf: ConfigDict, overrides) -> ConfigDict:
    """Apply ``section.key=value`` overrides; keys must already exist."""
    out = {sec: dict(keys) for sec, keys in conf.items()}
    for item in overrides:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not of the form key=value")
        dotted, value = item.split("=", 1)
        dotted = dotted.strip()
        if "." not in dotted:
            raise ConfigError(f"override key {dotted!r} must be section.key")
        section, key = dotted.rsplit(".", 1)
        if section not in out or key not in out[section]:
            raise ConfigError(f"override references unknown key [{section}] {key!r}")
        out[section][key] = value.strip()
    return out


# --- serialization ---------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _pulse_to_dict(pulse: Pulse) -> dict[str, str]:
    out: dict[str, str] = {}
    if pulse.shape == "gaussian":
        g = pulse.terms[0]
        out.update(shape="gaussian", peak=_fmt(g.peak), center=_fmt(g.center),
                   width=_fmt(g.width))
    elif pulse.shape == "constant":
        out.update(shape="constant", value=_fmt(pulse.value))
    elif pulse.shape == "sum_of_gaussians":
        terms = "; ".join(f"{_fmt(g.peak)},{_fmt(g.center)},{_fmt(g.width)}"
                          for g in pulse.terms)
        out.update(shape="sum_of_gaussians", terms=terms)
    elif pulse.shape == "tabulated":
        out.update(shape="tabulated",
                   times=", ".join(_fmt(x) for x in pulse.table_t),
                   values=", ".join(_fmt(x) for x in pulse.table_v))
    else:  # synthesized pulses in this package always come from chain-break synthesis
        out.update(shape="chain_break")
    out["phase"] = _fmt(pulse.phase)
    return out


def _detuning_to_dict(det: Detuning, key: str) -> dict[str, str]:
    if det.shape == "constant":
        return {key: _fmt(det.value)}
    if det.shape == "sum_of_gaussians":
        return {f"{key}_terms": "; ".join(
            f"{_fmt(g.peak)},{_fmt(g.center)},{_fmt(g.width)}" for g in det.terms)}
    return {
        f"{key}_times": ", ".join(_fmt(x) for x in det.table_t),
        f"{key}_values": ", ".join(_fmt(x) for x in det.table_v),
    }


def _fmt_amp(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}i"


def scenario_to_dict(name: str, cfg: LoopConfig, grid: TimeGrid,
                     initial: StateVector) -> ConfigDict:
    conf: ConfigDict = {
        "scenario": {"name": name},
        "time": {"unit": _fmt(cfg.time_unit)},
        "grid": {"t_start": _fmt(grid.t_start), "t_end": _fmt(grid.t_end),
                 "dt": _fmt(grid.dt)},
        "initial": {"basis": initial.basis,
                    "amplitudes": ", ".join(_fmt_amp(z)
                                            for z in initial.amplitudes)},
        "pulse.P": _pulse_to_dict(cfg.pulse_p),
        "pulse.S": _pulse_to_dict(cfg.pulse_s),
        "pulse.C": _pulse_to_dict(cfg.pulse_c),
        "detuning": {**_detuning_to_dict(cfg.detunings.delta2, "delta2"),
                     **_detuning_to_dict(cfg.detunings.delta3, "delta3")},
    }
    return conf


def preset_to_dict(p: ScenarioPreset) -> ConfigDict:
    return scenario_to_dict(p.name, p.cfg, p.grid, p.initial_state)


def dict_to_text(conf: ConfigDict) -> str:
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    for section, keys in conf.items():
        parser[section] = keys
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()


def scenario_to_text(name: str, cfg: LoopConfig, grid: TimeGrid,
                     initial: StateVector) -> str:
    return dict_to_text(scenario_to_dict(name, cfg, grid, initial))
