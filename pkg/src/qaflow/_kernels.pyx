# cython: boundscheck=False, wraparound=False, initializedcheck=False
# cython: cdivision=True, language_level=3
"""Compiled gate kernels.

Same contract as the NumPy backend: in-place updates of a C-contiguous
complex128 array of shape (batch, 2**n_qubits), one state per row.  The
per-element arithmetic mirrors the NumPy backend operation for
operation (multiply, multiply, add) and the extension is compiled with
FMA contraction disabled, so both backends agree to the last bit.
"""

from libc.math cimport cos, sin
from libc.stdint cimport int64_t

PAULI_X = 1
PAULI_Y = 2
PAULI_Z = 3


cdef inline void _shape_check(double complex[:, ::1] amps,
                              int n_qubits) except *:
    if amps.shape[1] != (1 << n_qubits):
        raise ValueError(
            f"expected shape (batch, {1 << n_qubits}), got "
            f"({amps.shape[0]}, {amps.shape[1]})")


def apply_rx(double complex[:, ::1] amps, int n_qubits, int qubit,
             double theta):
    """Rotate every row by exp(-i*theta/2 * X) on one qubit, in place."""
    _shape_check(amps, n_qubits)
    if not 0 <= qubit < n_qubits:
        raise ValueError(f"qubit {qubit} out of range")
    cdef Py_ssize_t dim = amps.shape[1]
    cdef Py_ssize_t batch = amps.shape[0]
    cdef Py_ssize_t half = dim >> 1
    cdef Py_ssize_t low_mask = (<Py_ssize_t>1 << qubit) - 1
    cdef Py_ssize_t bit = <Py_ssize_t>1 << qubit
    cdef double c = cos(0.5 * theta)
    cdef double s = sin(0.5 * theta)
    cdef double* base
    cdef Py_ssize_t r, g, i0, i1
    cdef double re0, im0, re1, im1
    if batch == 0:
        return
    base = <double*> &amps[0, 0]
    with nogil:
        for r in range(batch):
            for g in range(half):
                i0 = ((g >> qubit) << (qubit + 1)) | (g & low_mask)
                i1 = i0 | bit
                i0 = 2 * (r * dim + i0)
                i1 = 2 * (r * dim + i1)
                re0 = base[i0]
                im0 = base[i0 + 1]
                re1 = base[i1]
                im1 = base[i1 + 1]
                base[i0] = c * re0 + s * im1
                base[i0 + 1] = c * im0 - s * re1
                base[i1] = c * re1 + s * im0
                base[i1 + 1] = c * im1 - s * re0


def apply_rzz(double complex[:, ::1] amps, int n_qubits, int qubit_a,
              int qubit_b, double theta):
    """Rotate every row by exp(-i*theta/2 * Z@Z) on two qubits, in place."""
    _shape_check(amps, n_qubits)
    if not 0 <= qubit_a < n_qubits or not 0 <= qubit_b < n_qubits:
        raise ValueError("qubit out of range")
    if qubit_a == qubit_b:
        raise ValueError("apply_rzz needs two distinct qubits")
    cdef Py_ssize_t dim = amps.shape[1]
    cdef Py_ssize_t batch = amps.shape[0]
    cdef double pc = cos(0.5 * theta)
    cdef double ps = sin(0.5 * theta)
    cdef double* base
    cdef Py_ssize_t r, v, off
    cdef double re, im, pim
    if batch == 0:
        return
    base = <double*> &amps[0, 0]
    with nogil:
        for r in range(batch):
            for v in range(dim):
                # equal bits pick up exp(-i*theta/2), unequal exp(+i*theta/2)
                if ((v >> qubit_a) ^ (v >> qubit_b)) & 1:
                    pim = ps
                else:
                    pim = -ps
                off = 2 * (r * dim + v)
                re = base[off]
                im = base[off + 1]
                base[off] = re * pc - im * pim
                base[off + 1] = re * pim + im * pc


def apply_pauli(double complex[:, ::1] amps, int n_qubits, int qubit,
                int code, int64_t[::1] rows):
    """Apply one Pauli (1=X, 2=Y, 3=Z) on one qubit to selected rows."""
    _shape_check(amps, n_qubits)
    if not 0 <= qubit < n_qubits:
        raise ValueError(f"qubit {qubit} out of range")
    if code < 1 or code > 3:
        raise ValueError(f"bad Pauli code {code}")
    cdef Py_ssize_t dim = amps.shape[1]
    cdef Py_ssize_t batch = amps.shape[0]
    cdef Py_ssize_t half = dim >> 1
    cdef Py_ssize_t low_mask = (<Py_ssize_t>1 << qubit) - 1
    cdef Py_ssize_t bit = <Py_ssize_t>1 << qubit
    cdef Py_ssize_t n_rows = rows.shape[0]
    cdef double* base
    cdef Py_ssize_t ri, r, g, i0, i1
    cdef double re0, im0, re1, im1
    if n_rows == 0 or batch == 0:
        return
    for ri in range(n_rows):
        if not 0 <= rows[ri] < batch:
            raise ValueError(f"row {rows[ri]} out of range")
    base = <double*> &amps[0, 0]
    with nogil:
        for ri in range(n_rows):
            r = <Py_ssize_t> rows[ri]
            for g in range(half):
                i0 = ((g >> qubit) << (qubit + 1)) | (g & low_mask)
                i1 = i0 | bit
                i0 = 2 * (r * dim + i0)
                i1 = 2 * (r * dim + i1)
                re0 = base[i0]
                im0 = base[i0 + 1]
                re1 = base[i1]
                im1 = base[i1 + 1]
                if code == 1:
                    base[i0] = re1
                    base[i0 + 1] = im1
                    base[i1] = re0
                    base[i1 + 1] = im0
                elif code == 2:
                    base[i0] = im1
                    base[i0 + 1] = -re1
                    base[i1] = -im0
                    base[i1 + 1] = re0
                else:
                    base[i1] = -re1
                    base[i1 + 1] = -im1
