"""Command-line interface: run scenarios, check conditions, tridiagonalize.

Exit codes: 0 success, 1 usage/config/validation errors, 2 propagation
accuracy errors (norm drift above tolerance).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import csvio, linalg
from .configio import (Scenario, apply_overrides, dict_to_scenario,
                       dict_to_text, preset_to_dict, text_to_dict)
from .errors import AccuracyError, TriloopError
from .propagate import propagate, transform_trajectory
from .recipes import CONDITION_IDS, check_condition, preset, preset_names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triloop",
        description="Three-state loop dynamics in the bare and Householder bases",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="propagate a scenario and write a trajectory CSV")
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=preset_names(), help="bundled scenario")
    src.add_argument("--config", help="path to a scenario config file")
    run.add_argument("--set", dest="overrides", action="append", default=[],
                     metavar="SECTION.KEY=VALUE",
                     help="override a config value (repeatable)")
    run.add_argument("--sweep", metavar="SECTION.KEY=V1,V2,...",
                     help="fan out one run per swept value (runs concurrently)")
    run.add_argument("-o", "--output", help="output CSV path "
                     "(default <scenario>_trajectory.csv)")
    run.add_argument("--basis", choices=("bare", "householder"), default="bare",
                     help="integration basis (default bare)")
    run.add_argument("--stride", type=int, default=csvio.DEFAULT_STRIDE,
                     help="CSV output stride in steps (default 10)")

    check = sub.add_parser("check", help="evaluate drive conditions on a scenario")
    csrc = check.add_mutually_exclusive_group(required=True)
    csrc.add_argument("--preset", choices=preset_names())
    csrc.add_argument("--config")
    check.add_argument("--set", dest="overrides", action="append", default=[],
                       metavar="SECTION.KEY=VALUE")
    check.add_argument("--condition", choices=CONDITION_IDS, action="append",
                       help="condition to check (repeatable; default: all)")

    tri = sub.add_parser("tridiagonalize",
                         help="tridiagonalize a hermitian matrix from a text file")
    tri.add_argument("matrix", help="matrix file: first line N, then N rows of "
                     "N whitespace-separated a+bi entries")

    sub.add_parser("preset-list", help="list bundled scenarios")

    export = sub.add_parser("export-config",
                            help="print a preset as an editable config file")
    export.add_argument("--preset", choices=preset_names(), required=True)

    return parser


def _load_scenario(args) -> tuple[Scenario, dict]:
    if getattr(args, "preset", None):
        conf = preset_to_dict(preset(args.preset))
    else:
        with open(args.config, "r", encoding="utf-8") as fh:
            conf = text_to_dict(fh.read())
    conf = apply_overrides(conf, getattr(args, "overrides", []))
    return dict_to_scenario(conf), conf


def _run_one(scenario: Scenario, basis: str, stride: int, output: str) -> str:
    psi0 = scenario.initial_state
    if basis == "householder" and psi0.basis == "bare":
        from .frame import frame_grid
        from .propagate import StateVector
        refl = frame_grid(scenario.cfg, [scenario.grid.t_start])["reflections"][0]
        psi0 = StateVector(refl @ psi0.amplitudes, "householder")
    traj = propagate(scenario.cfg, psi0, scenario.grid, basis)
    csvio.write_trajectory_csv(output, traj, scenario.cfg, stride)
    if traj.basis != "bare":
        bare_traj = transform_trajectory(traj, scenario.cfg)
    else:
        bare_traj = traj
    pops = bare_traj.final_populations
    spec = traj.spectator_population
    lines = [
        f"scenario          : {scenario.name}",
        f"basis             : {traj.basis}",
        f"grid              : t in [{scenario.grid.t_start:g}, "
        f"{scenario.grid.t_end:g}], dt = {scenario.grid.dt:g} "
        f"({scenario.grid.n_steps} steps)",
        f"final populations : P1 = {pops[0]:.6f}  P2 = {pops[1]:.6f}  "
        f"P3 = {pops[2]:.6f}",
        f"norm drift        : {traj.norm_drift:.3e}",
        f"spectator range   : [{spec.min():.6f}, {spec.max():.6f}]",
        f"trajectory CSV    : {output}",
    ]
    return "\n".join(lines)


def _cmd_run(args) -> int:
    scenario, conf = _load_scenario(args)
    default_out = f"{scenario.name}_trajectory.csv"
    if args.sweep:
        if "=" not in args.sweep:
            raise TriloopError(f"--sweep needs SECTION.KEY=V1,V2,..., got {args.sweep!r}")
        key, values_raw = args.sweep.split("=", 1)
        values = [v.strip() for v in values_raw.split(",") if v.strip()]
        if not values:
            raise TriloopError("--sweep got an empty value list")
        base_out = args.output or default_out
        stem, dot, ext = base_out.rpartition(".")
        if not dot:
            stem, ext = base_out, "csv"

        def one(value: str) -> str:
            swept = apply_overrides(conf, [f"{key}={value}"])
            sc = dict_to_scenario(swept)
            out = f"{stem}_{key.replace('.', '_')}_{value}.{ext}"
            return _run_one(sc, args.basis, args.stride, out)

        with ThreadPoolExecutor(max_workers=min(8, len(values))) as pool:
            for summary in pool.map(one, values):
                print(summary)
                print()
        return 0
    print(_run_one(scenario, args.basis, args.stride, args.output or default_out))
    return 0


def _cmd_check(args) -> int:
    scenario, _ = _load_scenario(args)
    conditions = args.condition or list(CONDITION_IDS)
    for i, condition in enumerate(conditions):
        report = check_condition(scenario.cfg, condition, scenario.grid)
        if i:
            print()
        print(report.summary())
    return 0


def _cmd_tridiagonalize(args) -> int:
    with open(args.matrix, "r", encoding="utf-8") as fh:
        matrix = linalg.parse_matrix_text(fh.read())
    tridiagonal, transform = linalg.tridiagonalize(matrix)
    off = linalg.offtridiagonal_magnitude(tridiagonal)
    print(f"# T (tridiagonal, max off-tridiagonal magnitude {off:.3e})")
    print(linalg.format_matrix_text(tridiagonal), end="")
    print("# Q (unitary, T = Q^dagger H Q)")
    print(linalg.format_matrix_text(transform), end="")
    return 0


def _cmd_preset_list(_args) -> int:
    for name in preset_names():
        p = preset(name)
        expected = ", ".join(f"{x:.4g}" for x in p.expected_final_populations)
        print(f"{name:8s} {p.description}")
        print(f"{'':8s}   expected final populations: ({expected})")
    return 0


def _cmd_export_config(args) -> int:
    print(dict_to_text(preset_to_dict(preset(args.preset))), end="")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "check": _cmd_check,
        "tridiagonalize": _cmd_tridiagonalize,
        "preset-list": _cmd_preset_list,
        "export-config": _cmd_export_config,
    }
    try:
        return handlers[args.command](args)
    except AccuracyError as exc:
        print(f"accuracy error: {exc}", file=sys.stderr)
        return 2
    except (TriloopError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
