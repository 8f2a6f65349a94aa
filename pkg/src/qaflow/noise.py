"""Stochastic Pauli noise for the adiabatic circuit, sampled per shot.

Each shot is one trajectory: after every rx gate a single-qubit Pauli
error fires with probability ``p_1q`` (X, Y or Z equally likely), after
every rzz gate a two-qubit Pauli error fires with probability ``p_2q``
(all 15 non-identity pairs equally likely, ordered row-major as (I,X),
(I,Y), (I,Z), (X,I), ... with the first letter on the lower-numbered
qubit), and each measured bit flips independently with probability
``p_ro``.

Every shot draws from its own Philox stream (see the seeding module) in
a fixed layout.  With ``G`` noisy gate slots (``n_steps * (n_vertices +
n_edges)`` when gate noise is enabled, else 0):

* positions ``0 .. G-1``: one firing uniform per gate, circuit order;
* positions ``G .. 2G-1``: one Pauli-selector uniform per gate,
  consulted only when the matching slot fired;
* position ``2G``: the measurement uniform;
* positions ``2G+1 .. 2G+n``: readout flip uniforms for bits 0 to n-1,
  present only when ``p_ro > 0``.

A model with every rate zero therefore consumes exactly one uniform per
shot and reproduces the ideal sampler bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graphs import Graph
from .seeding import shot_uniforms, sweep_key
from .statevector import (Histogram, StateVector, TrotterSchedule,
                          circuit_ops, draw_outcome, init_plus_state,
                          measurement_cdf, qaa_evolve)

# Rows-times-dim cap for one trajectory batch, bounds peak memory.
_MAX_BATCH_AMPS = 1 << 22


@dataclass(frozen=True)
class NoiseModel:
    """Per-gate Pauli error rates plus a readout bit-flip rate."""

    p_1q: float
    p_2q: float
    p_ro: float

    def __post_init__(self):
        for name in ("p_1q", "p_2q", "p_ro"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")

    @property
    def has_gate_noise(self) -> bool:
        return self.p_1q > 0.0 or self.p_2q > 0.0

    @property
    def is_zero(self) -> bool:
        return not self.has_gate_noise and self.p_ro == 0.0


# Error-rate presets for two recent superconducting-transmon device
# generations: optimistic rates for the newer revision, median rates for
# the older one.
HERON_R3_OPT = NoiseModel(p_1q=1e-4, p_2q=2e-3, p_ro=8e-3)
HERON_R2_MED = NoiseModel(p_1q=2e-4, p_2q=6e-3, p_ro=1.5e-2)

NOISE_PRESETS: dict[str, NoiseModel] = {
    "none": NoiseModel(0.0, 0.0, 0.0),
    "heron-r3-opt": HERON_R3_OPT,
    "heron-r2-med": HERON_R2_MED,
}


def parse_noise_spec(text: str) -> NoiseModel:
    """Resolve a preset name or ``custom:p_1q,p_2q,p_ro`` string."""
    if text in NOISE_PRESETS:
        return NOISE_PRESETS[text]
    if text.startswith("custom:"):
        parts = text[len("custom:"):].split(",")
        if len(parts) != 3:
            raise ValueError(
                f"custom noise needs three rates p_1q,p_2q,p_ro: {text!r}")
        try:
            rates = [float(p) for p in parts]
        except ValueError:
            raise ValueError(f"non-numeric noise rate in {text!r}") from None
        return NoiseModel(*rates)
    known = ", ".join(sorted(NOISE_PRESETS))
    raise ValueError(
        f"unknown noise spec {text!r}; expected one of {known} or "
        f"custom:p_1q,p_2q,p_ro")


@dataclass(frozen=True)
class NoisyRunConfig:
    """Everything that determines one noisy sampling run."""

    graph: Graph
    schedule: TrotterSchedule
    noise: NoiseModel
    shots: int
    seed: int

    def __post_init__(self):
        if self.shots < 1:
            raise ValueError(f"shots must be >= 1, got {self.shots}")


def _readout_mask(uniforms: np.ndarray, p_ro: float) -> int:
    """Pack per-bit flip decisions into an XOR mask over basis indices."""
    mask = 0
    for q, u in enumerate(uniforms):
        if u < p_ro:
            mask |= 1 << q
    return mask


def sample_with_readout(sv: StateVector, shots: int, seed: int,
                        p_ro: float) -> Histogram:
    """Measure a fixed state with optional readout bit flips.

    This is the gate-noise-free sampling path; with ``p_ro == 0`` it
    consumes the same draws as the ideal sampler and returns identical
    histograms.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    cdf = measurement_cdf(sv)
    n = sv.n_qubits
    length = 1 + (n if p_ro > 0.0 else 0)
    outcomes = np.empty(shots, dtype=np.int64)
    for i in range(shots):
        u = shot_uniforms(seed, i, length)
        v = draw_outcome(cdf, u[0])
        if p_ro > 0.0:
            v ^= _readout_mask(u[1:], p_ro)
        outcomes[i] = v
    return Histogram.from_indices(outcomes, n)


def _apply_slot_errors(amps: np.ndarray, n: int, op: tuple,
                       rows: np.ndarray, codes: np.ndarray) -> None:
    """Insert the fired Pauli errors for one gate slot."""
    if op[0] == "rx":
        qubit = op[1]
        for code in (1, 2, 3):
            sel = rows[codes == code - 1]
            if sel.size:
                kernels.apply_pauli(amps, n, qubit, code, sel)
    else:
        qubit_a, qubit_b = op[1], op[2]
        pair = codes + 1  # 1..15, high two bits = Pauli on qubit_a
        pa = pair >> 2
        pb = pair & 3
        for code in (1, 2, 3):
            sel = rows[pa == code]
            if sel.size:
                kernels.apply_pauli(amps, n, qubit_a, code, sel)
            sel = rows[pb == code]
            if sel.size:
                kernels.apply_pauli(amps, n, qubit_b, code, sel)


def _trajectory_batch(config: NoisyRunConfig, ops: list[tuple],
                      shot_lo: int, shot_hi: int) -> np.ndarray:
    """Outcome indices for shots [shot_lo, shot_hi) of a noisy run."""
    graph, nm = config.graph, config.noise
    n = graph.n_vertices
    dim = 1 << n
    n_slots = len(ops)
    length = 2 * n_slots + 1 + (n if nm.p_ro > 0.0 else 0)
    slot_p = np.array([nm.p_1q if op[0] == "rx" else nm.p_2q
                       for op in ops])
    slot_k = np.array([3 if op[0] == "rx" else 15 for op in ops])

    batch = shot_hi - shot_lo
    slot_rows: dict[int, tuple[list[int], list[int]]] = {}
    meas_u = np.empty(batch)
    flip_masks = np.zeros(batch, dtype=np.int64)
    for r in range(batch):
        u = shot_uniforms(config.seed, shot_lo + r, length)
        for slot in np.flatnonzero(u[:n_slots] < slot_p):
            slot = int(slot)
            k = int(slot_k[slot])
            code = min(int(u[n_slots + slot] * k), k - 1)
            rows_codes = slot_rows.setdefault(slot, ([], []))
            rows_codes[0].append(r)
            rows_codes[1].append(code)
        meas_u[r] = u[2 * n_slots]
        if nm.p_ro > 0.0:
            flip_masks[r] = _readout_mask(u[2 * n_slots + 1:], nm.p_ro)

    amps = np.empty((batch, dim), dtype=np.complex128)
    amps[:] = 1.0 / np.sqrt(dim)
    for slot, op in enumerate(ops):
        if op[0] == "rx":
            kernels.apply_rx(amps, n, op[1], op[2])
        else:
            kernels.apply_rzz(amps, n, op[1], op[2], op[3])
        fired = slot_rows.get(slot)
        if fired is not None:
            _apply_slot_errors(amps, n, op,
                               np.asarray(fired[0], dtype=np.int64),
                               np.asarray(fired[1], dtype=np.int64))

    probs = np.abs(amps) ** 2
    cdf = np.cumsum(probs, axis=1)
    outcomes = np.empty(batch, dtype=np.int64)
    for r in range(batch):
        outcomes[r] = draw_outcome(cdf[r], meas_u[r])
    return outcomes ^ flip_masks


def noisy_qaa_histogram(config: NoisyRunConfig) -> Histogram:
    """Sample the adiabatic circuit under a stochastic Pauli noise model.

    Gate noise propagates each shot through its own perturbed circuit;
    without gate noise the ideal state is evolved once and only
    measurement and readout are per-shot.

    Args:
        config: run description; see NoisyRunConfig.

    Returns:
        Histogram over measured (possibly flipped) bitstrings.
    """
    if not config.noise.has_gate_noise:
        sv = qaa_evolve(config.graph, config.schedule)
        return sample_with_readout(sv, config.shots, config.seed,
                                   config.noise.p_ro)
    dim = 1 << config.graph.n_vertices
    ops = list(circuit_ops(config.graph, config.schedule))
    chunk = max(1, _MAX_BATCH_AMPS // dim)
    pieces = []
    for lo in range(0, config.shots, chunk):
        hi = min(lo + chunk, config.shots)
        pieces.append(_trajectory_batch(config, ops, lo, hi))
    return Histogram.from_indices(np.concatenate(pieces),
                                  config.graph.n_vertices)


def depth_sweep(graph: Graph, noise: NoiseModel, depths: list[int],
                dt: float, shots: int, seed: int) -> list[Histogram]:
    """Run the noisy sampler at several circuit depths.

    Each depth gets an independent master seed derived from ``seed`` and
    its position in the list, so adding or reordering depths never
    silently correlates runs.

    Args:
        graph: problem instance.
        noise: noise model shared by all runs.
        depths: step counts, each >= 0.
        dt: step duration shared by all runs.
        shots: samples per depth.
        seed: sweep master seed.

    Returns:
        One Histogram per depth, in input order.
    """
    out = []
    for position, n_steps in enumerate(depths):
        config = NoisyRunConfig(
            graph=graph,
            schedule=TrotterSchedule(dt=dt, n_steps=n_steps),
            noise=noise,
            shots=shots,
            seed=sweep_key(seed, position),
        )
        out.append(noisy_qaa_histogram(config))
    return out
