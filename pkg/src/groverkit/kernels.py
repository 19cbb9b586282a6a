"""Backend selection for the amplitude kernels.

The compiled extension is used when it imported cleanly; otherwise the numpy
fallback is used. Set ``GROVERKIT_PURE=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKENDS = {"python": _kernels_py}

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    BACKENDS["cython"] = _ckernels

if _ckernels is not None and os.environ.get("GROVERKIT_PURE", "") not in ("1", "true", "yes"):
    BACKEND = "cython"
else:
    BACKEND = "python"

_active = BACKENDS[BACKEND]

hadamard = _active.hadamard
pauli_x = _active.pauli_x
pauli_z = _active.pauli_z
phase_flip_masked = _active.phase_flip_masked
add_const = _active.add_const
reflect_about_mean = _active.reflect_about_mean

__all__ = [
    "BACKEND",
    "BACKENDS",
    "hadamard",
    "pauli_x",
    "pauli_z",
    "phase_flip_masked",
    "add_const",
    "reflect_about_mean",
]
