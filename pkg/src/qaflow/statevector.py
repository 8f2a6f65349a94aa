"""Exact statevector simulation of the adiabatic Max-Cut circuit.

The circuit follows the first-order product formula for the interpolating
Hamiltonian ``H(s) = (1 - s) * H_mixer + s * H_problem``: at each of the
``n_steps`` values of ``s`` on a uniform grid from 0 to 1 (both endpoints
included), one transverse-rotation layer ``rx(2 * (1 - s) * dt)`` on every
vertex is followed by one ``rzz(-2 * s * dt)`` gate on every edge.  The
rzz angle convention doubles the effective problem coupling and adds a
cut-independent global phase; see the hamiltonians module for the exact
generator this circuit realises.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import kernels
from .errors import BudgetError, NumericalError
from .graphs import Graph, MaxCutSolution
from .seeding import shot_uniforms

# Dense statevectors and Hamiltonians are capped at 2^14 amplitudes.
MAX_DENSE_QUBITS = 14

# Acceptable drift of the total probability before sampling refuses.
_NORM_TOL = 1e-6


@dataclass(frozen=True)
class TrotterSchedule:
    """Product-formula schedule: ``n_steps`` slices of duration ``dt``.

    Total evolution time is ``dt * n_steps``.  ``n_steps == 0`` leaves the
    initial state untouched.
    """

    dt: float
    n_steps: int

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.n_steps < 0:
            raise ValueError(f"n_steps must be >= 0, got {self.n_steps}")

    @property
    def total_time(self) -> float:
        return self.dt * self.n_steps

    def s_grid(self) -> np.ndarray:
        """Interpolation parameter at each step, 0 to 1 inclusive."""
        return np.linspace(0.0, 1.0, self.n_steps)


class StateVector:
    """Dense amplitudes over computational basis states.

    Basis index bit ``i`` is the side of vertex ``i`` (bit 0 least
    significant).  Mutating gate operations require exclusive ownership of
    the underlying array.
    """

    __slots__ = ("n_qubits", "amplitudes")

    def __init__(self, n_qubits: int, amplitudes: np.ndarray):
        if amplitudes.shape != (1 << n_qubits,):
            raise ValueError(
                f"expected {1 << n_qubits} amplitudes, got "
                f"{amplitudes.shape}")
        self.n_qubits = n_qubits
        self.amplitudes = np.ascontiguousarray(amplitudes,
                                               dtype=np.complex128)

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


def init_plus_state(n_qubits: int) -> StateVector:
    """Uniform superposition over all partitions (the mixer ground state)."""
    if n_qubits < 1:
        raise ValueError(f"need at least one qubit, got {n_qubits}")
    if n_qubits > MAX_DENSE_QUBITS:
        raise BudgetError(
            f"dense simulation limited to {MAX_DENSE_QUBITS} qubits, "
            f"got {n_qubits}")
    dim = 1 << n_qubits
    amps = np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)
    return StateVector(n_qubits, amps)


def apply_rx(sv: StateVector, qubit: int, theta: float) -> StateVector:
    """In-place rotation exp(-i*theta/2 * X) on one qubit; returns sv."""
    if not 0 <= qubit < sv.n_qubits:
        raise ValueError(f"qubit {qubit} out of range")
    kernels.apply_rx(sv.amplitudes[None, :], sv.n_qubits, qubit, theta)
    return sv


def apply_rzz(sv: StateVector, qubit_a: int, qubit_b: int,
              theta: float) -> StateVector:
    """In-place rotation exp(-i*theta/2 * Z@Z) on a qubit pair; returns sv."""
    for q in (qubit_a, qubit_b):
        if not 0 <= q < sv.n_qubits:
            raise ValueError(f"qubit {q} out of range")
    kernels.apply_rzz(sv.amplitudes[None, :], sv.n_qubits,
                      qubit_a, qubit_b, theta)
    return sv


def circuit_ops(graph: Graph,
                schedule: TrotterSchedule) -> Iterator[tuple]:
    """Gate sequence of the adiabatic circuit, in execution order.

    Yields ``("rx", qubit, theta)`` and ``("rzz", a, b, theta)`` tuples.
    The noisy sampler walks the same sequence so that its zero-noise
    limit is the ideal circuit gate for gate.
    """
    for s in schedule.s_grid():
        beta = (1.0 - s) * schedule.dt
        gamma = s * schedule.dt
        for q in range(graph.n_vertices):
            yield ("rx", q, 2.0 * beta)
        for a, b in graph.edges:
            yield ("rzz", a, b, -2.0 * gamma)


def qaa_evolve(graph: Graph, schedule: TrotterSchedule) -> StateVector:
    """Run the full adiabatic circuit from the uniform superposition.

    Args:
        graph: problem instance (dense budget applies).
        schedule: Trotter schedule; larger ``n_steps`` at fixed ``dt``
            tracks the adiabatic path more closely.

    Returns:
        Final StateVector.
    """
    sv = init_plus_state(graph.n_vertices)
    amps = sv.amplitudes[None, :]
    n = graph.n_vertices
    for op in circuit_ops(graph, schedule):
        if op[0] == "rx":
            kernels.apply_rx(amps, n, op[1], op[2])
        else:
            kernels.apply_rzz(amps, n, op[1], op[2], op[3])
    return sv


@dataclass(frozen=True)
class Histogram:
    """Measurement counts keyed by MSB-first bitstring.

    Only observed outcomes appear; counts sum to ``shots``.
    """

    n_qubits: int
    shots: int
    counts: dict[str, int] = field(repr=False)

    @classmethod
    def from_indices(cls, indices: np.ndarray, n_qubits: int) -> "Histogram":
        """Tally basis-state indices into bitstring counts."""
        binned = np.bincount(indices, minlength=1 << n_qubits)
        counts = {format(v, f"0{n_qubits}b"): int(c)
                  for v, c in enumerate(binned) if c > 0}
        return cls(n_qubits=n_qubits, shots=int(binned.sum()), counts=counts)

    def top(self, k: int) -> list[tuple[str, int]]:
        """The ``k`` most frequent outcomes, ties by ascending bit word."""
        ranked = sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))
        return ranked[:k] if k > 0 else ranked

    def fraction(self, words) -> float:
        """Fraction of shots landing on any of the given bitstrings."""
        hit = sum(self.counts.get(w, 0) for w in words)
        return hit / self.shots if self.shots else 0.0


def measurement_cdf(sv: StateVector) -> np.ndarray:
    """Cumulative outcome distribution, with a total-probability check."""
    probs = sv.probabilities()
    total = float(probs.sum())
    if abs(total - 1.0) > _NORM_TOL:
        raise NumericalError(
            f"state norm drifted: total probability {total!r}")
    return np.cumsum(probs)


def draw_outcome(cdf: np.ndarray, u: float) -> int:
    """Map one uniform draw to a basis-state index via the inverse CDF."""
    idx = int(np.searchsorted(cdf, u, side="right"))
    return min(idx, cdf.size - 1)


def sample_measurements(sv: StateVector, shots: int,
                        seed: int) -> Histogram:
    """Sample computational-basis measurements of a state.

    Shot ``i`` consumes the first uniform of its own derived stream (see
    the seeding module), so histograms are reproducible and independent
    of batching.

    Args:
        sv: state to measure.
        shots: number of samples, >= 1.
        seed: master seed for the run.

    Returns:
        Histogram of outcomes.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    cdf = measurement_cdf(sv)
    outcomes = np.empty(shots, dtype=np.int64)
    for i in range(shots):
        outcomes[i] = draw_outcome(cdf, shot_uniforms(seed, i, 1)[0])
    return Histogram.from_indices(outcomes, sv.n_qubits)


def ground_manifold_overlap(sv: StateVector,
                            solution: MaxCutSolution) -> float:
    """Total probability on the optimal-cut basis states.

    Args:
        sv: state to score.
        solution: output of brute_force_maxcut for the same graph.

    Returns:
        Sum of outcome probabilities over all optimal partitions.
    """
    indices = solution.solution_indices()
    if max(indices) >= sv.amplitudes.size:
        raise ValueError("solution does not fit this state's qubit count")
    probs = sv.probabilities()
    return float(probs[list(indices)].sum())
