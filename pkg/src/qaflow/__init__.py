"""Adiabatic Max-Cut simulation, spectral flow, and noise experiments."""

__version__ = "0.1.0"

from .errors import (BudgetError, DegenerateGapError, GraphFormatError,
                     NumericalError, QaflowError)
from .graphs import (Graph, MaxCutSolution, Partition, brute_force_maxcut,
                     cut_value, cut_values_all, load_graph, parse_graph)
from .hamiltonians import (exact_circuit_unitary, exact_spectrum,
                           exact_unitary, ground_degeneracy, interpolate,
                           level_multiplicities, mixer_matrix,
                           problem_diagonal)
from .kernels import backend_name
from .statevector import (Histogram, StateVector, TrotterSchedule,
                          apply_rx, apply_rzz, ground_manifold_overlap,
                          init_plus_state, qaa_evolve, sample_measurements)
from .flow import (FlowSample, IndexReport, SpectralFlow, compute_flow,
                   eigenphases, intersection_index, trotter_unitary)
from .noise import (HERON_R2_MED, HERON_R3_OPT, NOISE_PRESETS, NoiseModel,
                    NoisyRunConfig, depth_sweep, noisy_qaa_histogram,
                    parse_noise_spec, sample_with_readout)

__all__ = [
    "BudgetError", "DegenerateGapError", "GraphFormatError",
    "NumericalError", "QaflowError",
    "Graph", "MaxCutSolution", "Partition", "brute_force_maxcut",
    "cut_value", "cut_values_all", "load_graph", "parse_graph",
    "exact_circuit_unitary", "exact_spectrum", "exact_unitary",
    "ground_degeneracy", "interpolate", "level_multiplicities",
    "mixer_matrix", "problem_diagonal",
    "backend_name",
    "Histogram", "StateVector", "TrotterSchedule", "apply_rx", "apply_rzz",
    "ground_manifold_overlap", "init_plus_state", "qaa_evolve",
    "sample_measurements",
    "FlowSample", "IndexReport", "SpectralFlow", "compute_flow",
    "eigenphases", "intersection_index", "trotter_unitary",
    "HERON_R2_MED", "HERON_R3_OPT", "NOISE_PRESETS", "NoiseModel",
    "NoisyRunConfig", "depth_sweep", "noisy_qaa_histogram",
    "parse_noise_spec", "sample_with_readout",
    "__version__",
]
