"""Spectral flow of the Trotter circuit and the intersection index.

Two complementary views of the adiabatic path are computed here.  The
unitary view freezes the interpolation parameter ``s``, builds the full
product circuit as a matrix, and reads off its eigenphases; sweeping
``s`` and plotting ``scale * s * exp(i * phase)`` traces the spiral
pattern of the circuit spectrum.  The Hermitian view diagonalises the
interpolating Hamiltonian itself and counts signed crossings of its
eigenvalue curves through a reference line running inside the spectral
gap at both endpoints.  The net signed count (downward minus upward) is a
parity-robust invariant: it always equals the rank jump of the
below-line spectral projector and, for Max-Cut instances, the ground
degeneracy minus one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetError, DegenerateGapError, NumericalError
from .graphs import Graph, brute_force_maxcut
from .hamiltonians import exact_spectrum, interpolate
from .statevector import TrotterSchedule
from . import kernels

# Building a dense circuit unitary costs dim^2 amplitudes; cap it lower
# than the statevector budget.
MAX_UNITARY_QUBITS = 10

# Unitarity and eigensolver consistency tolerances.
UNITARITY_TOL = 1e-8
DET_PHASE_TOL = 1e-6

# Segments shorter than this are not bisected further when hunting for
# hidden crossing pairs; counts are exact down to this resolution in s.
REFINE_FLOOR = 1e-6

_TWO_PI = 2.0 * np.pi


def _wrap(x):
    """Map angles to the interval [-pi, pi)."""
    return (x + np.pi) % _TWO_PI - np.pi


def trotter_unitary(graph: Graph, s: float,
                    schedule: TrotterSchedule) -> np.ndarray:
    """Matrix of the product circuit with ``s`` frozen for every step.

    Each step applies the transverse layer ``rx(2 * (1 - s) * dt)`` on all
    vertices followed by ``rzz(-2 * s * dt)`` on all edges.

    Args:
        graph: problem instance, at most ``MAX_UNITARY_QUBITS`` vertices.
        s: interpolation parameter in [0, 1].
        schedule: number of steps and step duration.

    Returns:
        Dense complex128 unitary of shape ``(2**n, 2**n)``.
    """
    n = graph.n_vertices
    if n > MAX_UNITARY_QUBITS:
        raise BudgetError(
            f"circuit unitaries limited to {MAX_UNITARY_QUBITS} qubits, "
            f"got {n}")
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"s must lie in [0, 1], got {s}")
    dim = 1 << n
    theta_x = 2.0 * (1.0 - s) * schedule.dt
    theta_zz = -2.0 * s * schedule.dt
    # Row r holds the image of basis state r, so the matrix is the
    # transpose of the evolved row stack.
    amps = np.eye(dim, dtype=np.complex128)
    for _ in range(schedule.n_steps):
        for q in range(n):
            kernels.apply_rx(amps, n, q, theta_x)
        for a, b in graph.edges:
            kernels.apply_rzz(amps, n, a, b, theta_zz)
    return np.ascontiguousarray(amps.T)


def eigenphases(u: np.ndarray,
                unitarity_tol: float = UNITARITY_TOL) -> np.ndarray:
    """Sorted eigenphases of a unitary matrix, in (-pi, pi].

    Validates unitarity up front and cross-checks the eigenvalue product
    against the determinant phase.

    Args:
        u: square complex matrix, unitary to ``unitarity_tol``.

    Returns:
        Ascending float64 array of ``dim`` angles.
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    dim = u.shape[0]
    defect = np.abs(u.conj().T @ u - np.eye(dim)).max()
    if defect > unitarity_tol:
        raise NumericalError(
            f"matrix is not unitary: max |U^H U - I| = {defect:.3e}")
    try:
        lam = np.linalg.eigvals(u)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigendecomposition failed: {exc}") from exc
    phases = np.angle(lam)
    mismatch = _wrap(phases.sum() - np.angle(np.linalg.det(u)))
    if abs(mismatch) > DET_PHASE_TOL:
        raise NumericalError(
            f"eigenvalue product disagrees with determinant phase by "
            f"{mismatch:.3e}")
    return np.sort(phases)


@dataclass(frozen=True)
class FlowSample:
    """Circuit spectrum at one value of ``s``.

    ``points`` are the phases mapped onto the spiral radius
    ``scale * s``, i.e. ``scale * s * exp(i * phase)``.
    """

    s: float
    phases: np.ndarray = field(repr=False)
    points: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class SpectralFlow:
    """Eigenphase samples across ``s`` plus tracked phase branches.

    ``branches[b, j]`` is the phase assigned to branch ``b`` at sample
    ``j`` by greedy nearest-phase continuation (ties broken towards the
    linear prediction from the previous step).  ``wrap_flags[j]`` is True
    when the spectral spread bound ``t * 2 * ((1-s) * n + s * n_edges)``
    reaches a full turn, in which case phases at that sample may alias
    and branch identities are not trustworthy.
    """

    s_values: np.ndarray = field(repr=False)
    samples: list = field(repr=False)
    branches: np.ndarray = field(repr=False)
    wrap_flags: np.ndarray = field(repr=False)
    scale: float
    schedule: TrotterSchedule

    @property
    def any_wrap(self) -> bool:
        return bool(self.wrap_flags.any())


def _track_branches(s_values: np.ndarray,
                    phase_rows: list[np.ndarray]) -> np.ndarray:
    """Greedy nearest-phase branch assignment across samples."""
    dim = phase_rows[0].size
    n_s = len(phase_rows)
    branches = np.empty((dim, n_s), dtype=np.float64)
    branches[:, 0] = phase_rows[0]
    prev = phase_rows[0].copy()
    vel = np.zeros(dim)
    for j in range(1, n_s):
        cand = phase_rows[j]
        ds = s_values[j] - s_values[j - 1]
        cost = np.abs(_wrap(cand[None, :] - prev[:, None]))
        tie = np.abs(_wrap(cand[None, :] - (prev + vel * ds)[:, None]))
        order = np.lexsort((tie.ravel(), cost.ravel()))
        assign = np.full(dim, -1, dtype=np.int64)
        branch_free = np.ones(dim, dtype=bool)
        cand_free = np.ones(dim, dtype=bool)
        left = dim
        for flat in order:
            b, c = divmod(int(flat), dim)
            if branch_free[b] and cand_free[c]:
                assign[b] = c
                branch_free[b] = False
                cand_free[c] = False
                left -= 1
                if left == 0:
                    break
        chosen = cand[assign]
        vel = _wrap(chosen - prev) / ds
        prev = chosen.copy()
        branches[:, j] = chosen
    return branches


def compute_flow(graph: Graph, n_samples: int, schedule: TrotterSchedule,
                 scale: float = 20.0) -> SpectralFlow:
    """Sample circuit eigenphases over a uniform ``s`` grid.

    Args:
        graph: problem instance within the unitary budget.
        n_samples: number of ``s`` values from 0 to 1 inclusive, >= 2.
        schedule: Trotter schedule used at every sample.
        scale: radial factor for the spiral embedding, > 0.

    Returns:
        SpectralFlow with per-sample phases, spiral points, tracked
        branches, and phase-wrap flags.
    """
    if n_samples < 2:
        raise ValueError(f"need at least 2 samples, got {n_samples}")
    if not scale > 0:
        raise ValueError(f"scale must be positive, got {scale}")
    s_values = np.linspace(0.0, 1.0, n_samples)
    t = schedule.total_time
    n = graph.n_vertices
    samples = []
    phase_rows = []
    wrap_flags = np.zeros(n_samples, dtype=bool)
    for j, s in enumerate(s_values):
        phases = eigenphases(trotter_unitary(graph, float(s), schedule))
        phase_rows.append(phases)
        points = (scale * s) * np.exp(1j * phases)
        samples.append(FlowSample(s=float(s), phases=phases, points=points))
        spread_bound = 2.0 * ((1.0 - s) * n + s * graph.n_edges)
        wrap_flags[j] = t * spread_bound >= _TWO_PI
    branches = _track_branches(s_values, phase_rows)
    return SpectralFlow(s_values=s_values, samples=samples,
                        branches=branches, wrap_flags=wrap_flags,
                        scale=scale, schedule=schedule)


@dataclass(frozen=True)
class IndexReport:
    """Signed crossing count of the Hermitian flow through the gap line.

    ``index`` is downward minus upward crossings and always equals
    ``rank_end - rank_start``, the jump in the number of eigenvalues
    below the line between the endpoints.
    """

    index: int
    crossings_down: int
    crossings_up: int
    rank_start: int
    rank_end: int


def intersection_index(graph: Graph, n_samples: int = 20,
                       problem_scale: float = 2.0) -> IndexReport:
    """Count signed eigenvalue crossings of the interpolation spectrum.

    The reference line runs from the mixer mid-gap at ``s = 0`` to the
    problem mid-gap at ``s = 1`` (halfway between the ground level
    ``-problem_scale * max_cut`` and the first excited level).  Crossings
    are located by sign changes of eigenvalue-minus-line on an adaptively
    bisected grid; a Lipschitz bound on the eigenvalue motion rules out
    hidden crossing pairs above the resolution floor.

    Args:
        graph: problem instance within the dense budget, with at least
            one edge.
        n_samples: size of the initial uniform grid, >= 2.
        problem_scale: problem-term multiplier of the interpolation.

    Returns:
        IndexReport; for a connected gap structure the index equals the
        Max-Cut degeneracy minus one.
    """
    if n_samples < 2:
        raise ValueError(f"need at least 2 samples, got {n_samples}")
    if graph.n_edges == 0:
        raise DegenerateGapError(
            "graph has no edges: the final spectrum is fully degenerate "
            "and no gap line exists")
    n = graph.n_vertices
    best = brute_force_maxcut(graph)
    line0 = -float(n) + 1.0
    line1 = problem_scale * (0.5 - best.max_cut)

    def line(s: float) -> float:
        return (1.0 - s) * line0 + s * line1

    spectra: dict[float, np.ndarray] = {}

    def spectrum(s: float) -> np.ndarray:
        w = spectra.get(s)
        if w is None:
            w = exact_spectrum(interpolate(graph, s, problem_scale))
            spectra[s] = w
        return w

    for s_end in (0.0, 1.0):
        clearance = np.abs(spectrum(s_end) - line(s_end)).min()
        if clearance < 1e-9:
            raise DegenerateGapError(
                f"spectrum touches the gap line at s = {s_end}")

    # Eigenvalue speed is bounded by the norm of d H/d s plus the line
    # slope, so a branch at distance d from the line needs at least
    # d / lip of s-travel to reach it.
    lip = (n + problem_scale * best.max_cut) + abs(line1 - line0)

    grid = np.linspace(0.0, 1.0, n_samples)
    stack = [(float(grid[i]), float(grid[i + 1]))
             for i in range(n_samples - 1)]
    down = 0
    up = 0
    while stack:
        s0, s1 = stack.pop()
        f0 = spectrum(s0) - line(s0)
        f1 = spectrum(s1) - line(s1)
        h = s1 - s0
        hidden_risk = (np.abs(f0) + np.abs(f1)) <= lip * h
        if h > REFINE_FLOOR and bool(hidden_risk.any()):
            mid = 0.5 * (s0 + s1)
            stack.append((s0, mid))
            stack.append((mid, s1))
            continue
        down += int(np.count_nonzero((f0 > 0) & (f1 < 0)))
        up += int(np.count_nonzero((f0 < 0) & (f1 > 0)))

    rank_start = int(np.count_nonzero(spectrum(0.0) < line(0.0)))
    rank_end = int(np.count_nonzero(spectrum(1.0) < line(1.0)))
    index = down - up
    if index != rank_end - rank_start:
        raise NumericalError(
            f"crossing count {index} inconsistent with projector rank "
            f"jump {rank_end - rank_start}")
    return IndexReport(index=index, crossings_down=down, crossings_up=up,
                       rank_start=rank_start, rank_end=rank_end)
