"""Gate-kernel backend selection.

Prefers the compiled Cython kernels and falls back to the NumPy
implementation when the extension is absent.  Override with the
``QAFLOW_BACKEND`` environment variable (``compiled`` or ``python``);
forcing ``compiled`` raises if the extension did not build.
"""

from __future__ import annotations

import os

from ._kernels_py import PAULI_X, PAULI_Y, PAULI_Z  # noqa: F401

_choice = os.environ.get("QAFLOW_BACKEND")
if _choice not in (None, "compiled", "python"):
    raise ImportError(
        f"QAFLOW_BACKEND must be 'compiled' or 'python', got {_choice!r}")

if _choice == "python":
    from . import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
        BACKEND = "compiled"
    except ImportError:
        if _choice == "compiled":
            raise
        from . import _kernels_py as _impl
        BACKEND = "python"

apply_rx = _impl.apply_rx
apply_rzz = _impl.apply_rzz
apply_pauli = _impl.apply_pauli


def backend_name() -> str:
    """Name of the active gate-kernel backend."""
    return BACKEND
