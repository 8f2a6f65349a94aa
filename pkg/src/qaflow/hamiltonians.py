"""Dense Hamiltonians for the adiabatic interpolation, and exact propagators.

The problem Hamiltonian is diagonal with entry ``-cut(v)`` on basis state
``v``, so its ground manifold is exactly the set of optimal partitions at
energy ``-max_cut``.  The mixer is ``-sum_i X_i``, whose unique ground
state is the uniform superposition.  The interpolation

    H(s) = (1 - s) * H_mixer + s * problem_scale * H_problem

uses ``problem_scale = 2`` by default because the circuit's
``rzz(-2 * gamma)`` convention realises twice the problem coupling (plus a
cut-independent global phase handled by exact_circuit_unitary).
"""

from __future__ import annotations

import numpy as np

from .errors import BudgetError, NumericalError
from .graphs import Graph, cut_values_all
from .statevector import MAX_DENSE_QUBITS

# Eigenvalues closer than this are treated as one degenerate level.
DEGENERACY_TOL = 1e-8


def _check_dense_budget(n_qubits: int) -> None:
    if n_qubits > MAX_DENSE_QUBITS:
        raise BudgetError(
            f"dense operators limited to {MAX_DENSE_QUBITS} qubits, "
            f"got {n_qubits}")


def problem_diagonal(graph: Graph) -> np.ndarray:
    """Diagonal of the cut Hamiltonian: entry v is ``-cut(v)``.

    Args:
        graph: problem instance within the dense budget.

    Returns:
        float64 array of length ``2**n_vertices``.
    """
    _check_dense_budget(graph.n_vertices)
    return -cut_values_all(graph).astype(np.float64)


def mixer_matrix(n_qubits: int) -> np.ndarray:
    """Dense mixer ``-sum_i X_i``: -1 between indices at Hamming distance 1.

    Args:
        n_qubits: number of vertices, within the dense budget.

    Returns:
        Symmetric float64 matrix of shape ``(2**n, 2**n)``.
    """
    if n_qubits < 1:
        raise ValueError(f"need at least one qubit, got {n_qubits}")
    _check_dense_budget(n_qubits)
    dim = 1 << n_qubits
    h = np.zeros((dim, dim), dtype=np.float64)
    idx = np.arange(dim)
    for q in range(n_qubits):
        h[idx, idx ^ (1 << q)] = -1.0
    return h


def interpolate(graph: Graph, s: float,
                problem_scale: float = 2.0) -> np.ndarray:
    """Dense interpolating Hamiltonian at parameter ``s`` in [0, 1].

    Args:
        graph: problem instance.
        s: interpolation parameter; 0 is pure mixer, 1 pure problem.
        problem_scale: multiplier on the problem term (2.0 matches the
            circuit's rzz convention).

    Returns:
        Symmetric float64 matrix ``(1-s)*mixer + s*scale*diag(problem)``.
    """
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s must lie in [0, 1], got {s}")
    h = (1.0 - s) * mixer_matrix(graph.n_vertices)
    h[np.diag_indices_from(h)] += s * problem_scale * problem_diagonal(graph)
    return h


def exact_spectrum(h: np.ndarray, vectors: bool = False):
    """Eigenvalues (ascending) of a real symmetric Hamiltonian.

    Args:
        h: dense symmetric matrix.
        vectors: also return the orthonormal eigenvector columns.

    Returns:
        ``values`` or ``(values, vectors)``.
    """
    h = np.asarray(h, dtype=np.float64)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    if not np.allclose(h, h.T, rtol=0.0, atol=1e-12):
        raise NumericalError("matrix is not symmetric")
    try:
        if vectors:
            w, v = np.linalg.eigh(h)
            return w, v
        return np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc


def ground_degeneracy(values: np.ndarray,
                      tol: float = DEGENERACY_TOL) -> int:
    """Multiplicity of the lowest eigenvalue cluster."""
    values = np.sort(np.asarray(values, dtype=np.float64))
    return int(np.count_nonzero(values <= values[0] + tol))


def level_multiplicities(values: np.ndarray,
                         tol: float = DEGENERACY_TOL
                         ) -> list[tuple[float, int]]:
    """Cluster near-equal eigenvalues into (level, multiplicity) pairs."""
    values = np.sort(np.asarray(values, dtype=np.float64))
    levels: list[tuple[float, int]] = []
    start = 0
    for i in range(1, values.size + 1):
        if i == values.size or values[i] - values[i - 1] > tol:
            block = values[start:i]
            levels.append((float(block.mean()), block.size))
            start = i
    return levels


def exact_unitary(h: np.ndarray, t: float) -> np.ndarray:
    """Propagator ``exp(+i * t * h)`` by eigendecomposition.

    The sign matches the circuit layers, which implement ``exp(+i * dt *
    H(s))`` per step.
    """
    w, v = exact_spectrum(h, vectors=True)
    return (v * np.exp(1j * t * w)) @ v.conj().T


def exact_circuit_unitary(graph: Graph, s: float, t: float,
                          problem_scale: float = 2.0) -> np.ndarray:
    """Continuous-time limit of the fixed-``s`` Trotter circuit.

    The rzz layers contribute a cut-independent global phase
    ``exp(+i * s * t * n_edges)`` on top of evolution under the scaled
    interpolating Hamiltonian; the product circuit converges to this
    matrix at first order in ``dt``.
    """
    phase = np.exp(1j * s * t * graph.n_edges)
    return phase * exact_unitary(interpolate(graph, s, problem_scale), t)
