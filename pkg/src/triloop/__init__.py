"""Three-state loop quantum dynamics and Householder chain transformations.

The loop linkage (all three states pairwise coupled) is mapped onto a
nearest-neighbour chain by a time-dependent Householder reflection.
Special drive conditions break the chain (exposing a spectator state and
a hidden constant of motion) or enforce an effective two-photon
resonance (exposing a three-component dark state).  The same reflection
machinery tridiagonalizes arbitrary hermitian matrices.
"""

from .errors import (AccuracyError, ConfigError, DegenerateAngleError,
                     DegenerateDarkStateError, InvalidInputError,
                     NotApplicableError, SynthesisError, TableRangeError,
                     TriloopError)
from .frame import (BasisState, FrameSnapshot, MixingAngle, dark_state,
                    frame_grid, frame_snapshot, householder_states,
                    loop_householder_vector, mixing_angle, reflection_matrix,
                    spectator_state)
from .kernels import NUMBA_ENABLED
from .linalg import (reflection_from_vector, tridiagonalize,
                     parse_matrix_text, format_matrix_text)
from .model import (Detuning, DetuningSpec, GaussianTerm, LoopConfig, Pulse,
                    bare_hamiltonian, bare_hamiltonian_grid, evaluate_pulse)
from .propagate import (StateVector, TimeGrid, Trajectory, basis_state,
                        populations, projection_population, propagate,
                        transform_trajectory)
from .recipes import (CONDITION_IDS, ConditionReport, ScenarioPreset,
                      check_condition, final_superposition_prediction,
                      preset, preset_names, synthesize_chain_breaking_S)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "BasisState", "CONDITION_IDS", "ConditionReport",
    "ConfigError", "DegenerateAngleError", "DegenerateDarkStateError",
    "Detuning", "DetuningSpec", "FrameSnapshot", "GaussianTerm",
    "InvalidInputError", "LoopConfig", "MixingAngle", "NUMBA_ENABLED",
    "NotApplicableError", "Pulse", "ScenarioPreset", "StateVector",
    "SynthesisError", "TableRangeError", "TimeGrid", "Trajectory",
    "TriloopError", "bare_hamiltonian", "bare_hamiltonian_grid",
    "basis_state", "check_condition", "dark_state", "evaluate_pulse",
    "final_superposition_prediction", "format_matrix_text", "frame_grid",
    "frame_snapshot", "householder_states", "loop_householder_vector",
    "mixing_angle", "parse_matrix_text", "populations",
    "projection_population", "propagate", "preset", "preset_names",
    "reflection_from_vector", "reflection_matrix", "spectator_state",
    "synthesize_chain_breaking_S", "transform_trajectory", "tridiagonalize",
]
