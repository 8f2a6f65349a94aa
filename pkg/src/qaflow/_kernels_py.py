"""NumPy gate kernels: the portable fallback backend.

All kernels mutate a C-contiguous complex128 array of shape
``(batch, 2**n_qubits)`` in place, one row per independent state vector.
The arithmetic is written so each element sees the same sequence of
rounded operations as the compiled backend (multiply, multiply, add; no
fused multiply-add), keeping both backends numerically interchangeable.
"""

from __future__ import annotations

import math

import numpy as np

# Pauli codes used by apply_pauli.
PAULI_X = 1
PAULI_Y = 2
PAULI_Z = 3

# Sign masks for apply_rzz, keyed by (n_qubits, qubit_a, qubit_b).
_SIGN_CACHE: dict[tuple[int, int, int], np.ndarray] = {}
_SIGN_CACHE_MAX = 256


def _check(amps: np.ndarray, n_qubits: int) -> None:
    if amps.ndim != 2 or amps.shape[1] != (1 << n_qubits):
        raise ValueError(
            f"expected shape (batch, {1 << n_qubits}), got {amps.shape}")
    if amps.dtype != np.complex128:
        raise ValueError(f"expected complex128, got {amps.dtype}")


def apply_rx(amps: np.ndarray, n_qubits: int, qubit: int,
             theta: float) -> None:
    """Rotate every row by exp(-i*theta/2 * X) on one qubit, in place."""
    _check(amps, n_qubits)
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    batch = amps.shape[0]
    view = amps.reshape(batch, 1 << (n_qubits - 1 - qubit), 2, 1 << qubit)
    a0 = view[:, :, 0, :]
    a1 = view[:, :, 1, :]
    re0 = a0.real.copy()
    im0 = a0.imag.copy()
    re1 = a1.real.copy()
    im1 = a1.imag.copy()
    # (a0, a1) -> (c*a0 - i s*a1, c*a1 - i s*a0)
    a0.real = c * re0 + s * im1
    a0.imag = c * im0 - s * re1
    a1.real = c * re1 + s * im0
    a1.imag = c * im1 - s * re0


def _equal_sign(n_qubits: int, qubit_a: int, qubit_b: int) -> np.ndarray:
    """-1.0 where the two bits agree, +1.0 where they differ."""
    key = (n_qubits, qubit_a, qubit_b)
    cached = _SIGN_CACHE.get(key)
    if cached is None:
        idx = np.arange(1 << n_qubits, dtype=np.uint64)
        differ = ((idx >> np.uint64(qubit_a)) ^
                  (idx >> np.uint64(qubit_b))) & np.uint64(1)
        cached = np.where(differ == 1, 1.0, -1.0)
        if len(_SIGN_CACHE) >= _SIGN_CACHE_MAX:
            _SIGN_CACHE.clear()
        _SIGN_CACHE[key] = cached
    return cached


def apply_rzz(amps: np.ndarray, n_qubits: int, qubit_a: int, qubit_b: int,
              theta: float) -> None:
    """Rotate every row by exp(-i*theta/2 * Z@Z) on two qubits, in place.

    Basis states with equal bits on the pair pick up exp(-i*theta/2),
    unequal bits exp(+i*theta/2).
    """
    _check(amps, n_qubits)
    if qubit_a == qubit_b:
        raise ValueError("apply_rzz needs two distinct qubits")
    pc = math.cos(0.5 * theta)
    ps = math.sin(0.5 * theta)
    pim = ps * _equal_sign(n_qubits, qubit_a, qubit_b)
    re = amps.real.copy()
    im = amps.imag.copy()
    amps.real = re * pc - im * pim
    amps.imag = re * pim + im * pc


def apply_pauli(amps: np.ndarray, n_qubits: int, qubit: int, code: int,
                rows: np.ndarray) -> None:
    """Apply one Pauli (1=X, 2=Y, 3=Z) on one qubit to selected rows."""
    _check(amps, n_qubits)
    if code not in (PAULI_X, PAULI_Y, PAULI_Z):
        raise ValueError(f"bad Pauli code {code}")
    view = amps.reshape(amps.shape[0],
                        1 << (n_qubits - 1 - qubit), 2, 1 << qubit)
    for r in np.asarray(rows, dtype=np.int64):
        a0 = view[r, :, 0, :]
        a1 = view[r, :, 1, :]
        if code == PAULI_X:
            tmp = a0.copy()
            a0[...] = a1
            a1[...] = tmp
        elif code == PAULI_Y:
            tmp = a0.copy()
            a0[...] = -1j * a1
            a1[...] = 1j * tmp
        else:
            a1[...] = -a1
