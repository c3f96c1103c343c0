"""Trajectory CSV output: the data contract consumed by the plotting tool.

Columns (one row per output stride, default every 10th step, always
including the final grid point):

    t, Re_C1, Im_C1, Re_C2, Im_C2, Re_C3, Im_C3,
    P1, P2, P3, P_spectator, P_dark,
    theta, theta_dot, Dtilde2, Dtilde3, abs_Omega_tilde_P, abs_W23, norm

Values are written with 17 significant digits so identical runs produce
byte-identical files.
"""

from __future__ import annotations

import numpy as np

from .frame import frame_grid
from .model import LoopConfig
from .propagate import Trajectory

CSV_COLUMNS = (
    "t",
    "Re_C1", "Im_C1", "Re_C2", "Im_C2", "Re_C3", "Im_C3",
    "P1", "P2", "P3",
    "P_spectator", "P_dark",
    "theta", "theta_dot",
    "Dtilde2", "Dtilde3",
    "abs_Omega_tilde_P", "abs_W23",
    "norm",
)

DEFAULT_STRIDE = 10


def _row_indices(n_points: int, stride: int) -> np.ndarray:
    idx = np.arange(0, n_points, stride)
    if idx[-1] != n_points - 1:
        idx = np.append(idx, n_points - 1)
    return idx


def trajectory_table(traj: Trajectory, cfg: LoopConfig | None = None,
                     stride: int = DEFAULT_STRIDE) -> dict[str, np.ndarray]:
    """Column name -> values, subsampled by ``stride``."""
    cfg = cfg if cfg is not None else traj.config
    if stride < 1:
        stride = 1
    idx = _row_indices(traj.times.size, stride)
    t = traj.times[idx]
    arrays = frame_grid(cfg, t)
    states = traj.states[idx]
    pops = traj.populations[idx]
    table = {
        "t": t,
        "Re_C1": states[:, 0].real, "Im_C1": states[:, 0].imag,
        "Re_C2": states[:, 1].real, "Im_C2": states[:, 1].imag,
        "Re_C3": states[:, 2].real, "Im_C3": states[:, 2].imag,
        "P1": pops[:, 0], "P2": pops[:, 1], "P3": pops[:, 2],
        "P_spectator": traj.spectator_population[idx],
        "P_dark": traj.dark_population[idx],
        "theta": arrays["theta"],
        "theta_dot": arrays["theta_dot"],
        "Dtilde2": arrays["delta2_eff"],
        "Dtilde3": arrays["delta3_eff"],
        "abs_Omega_tilde_P": np.abs(arrays["omega_p_eff"]),
        "abs_W23": np.abs(arrays["w12"]),
        "norm": traj.norm[idx],
    }
    return table


def format_trajectory_csv(traj: Trajectory, cfg: LoopConfig | None = None,
                          stride: int = DEFAULT_STRIDE) -> str:
    table = trajectory_table(traj, cfg, stride)
    n_rows = table["t"].size
    lines = [",".join(CSV_COLUMNS)]
    for i in range(n_rows):
        lines.append(",".join(f"{table[col][i]:.17g}" for col in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def write_trajectory_csv(path, traj: Trajectory, cfg: LoopConfig | None = None,
                         stride: int = DEFAULT_STRIDE) -> None:
    text = format_trajectory_csv(traj, cfg, stride)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def read_trajectory_csv(path) -> dict[str, np.ndarray]:
    """Read a trajectory CSV back into column arrays (testing convenience)."""
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip().split(",")
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    return {name: data[:, i] for i, name in enumerate(header)}
