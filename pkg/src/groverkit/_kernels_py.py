"""Pure numpy kernels operating on a flat complex128 amplitude buffer.

Qubit ``q`` is bit ``q`` of the basis index (qubit 0 is the LSB). All
in-place kernels mutate ``amps`` and return ``None``; ``add_const`` returns
a fresh buffer since a permutation can't be done in place cheaply.
"""

import numpy as np

_SQRT1_2 = 1.0 / np.sqrt(2.0)


def _split(amps, q):
    # view as (high, 2, low) so axis 1 is the target bit
    return amps.reshape(-1, 2, 1 << q)


def hadamard(amps, q):
    v = _split(amps, q)
    a0 = v[:, 0, :].copy()
    a1 = v[:, 1, :]
    v[:, 0, :] = (a0 + a1) * _SQRT1_2
    v[:, 1, :] = (a0 - a1) * _SQRT1_2


def pauli_x(amps, q):
    v = _split(amps, q)
    v[:, [0, 1], :] = v[:, [1, 0], :]


def pauli_z(amps, q):
    v = _split(amps, q)
    v[:, 1, :] *= -1.0


def phase_flip_masked(amps, mask, value):
    """Negate every amplitude whose index satisfies ``i & mask == value``."""
    if mask == 0:
        amps *= -1.0
        return
    if mask == amps.shape[0] - 1:
        amps[value] = -amps[value]
        return
    idx = np.arange(amps.shape[0], dtype=np.int64)
    amps[(idx & mask) == value] *= -1.0


def add_const(amps, k, lo, m):
    """Map the ``m``-bit field starting at bit ``lo`` from x to (x + k) mod 2**m."""
    v = amps.reshape(-1, 1 << m, 1 << lo)
    return np.ascontiguousarray(np.roll(v, k, axis=1)).reshape(-1)


def reflect_about_mean(amps):
    mean = amps.mean()
    np.subtract(2.0 * mean, amps, out=amps)
