"""Dense statevector of an n-qubit register.

Qubit 0 is the least-significant bit of the basis index. Labels are written
MSB-first, so for two qubits the label ``"10"`` is basis index 2.
"""

from __future__ import annotations

from typing import Dict, Optional

import numpy as np

from .errors import InvalidGateError, InvalidStateError, InvalidWidthError

MAX_QUBITS = 24
NORM_TOL = 1e-12


def check_width(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InvalidWidthError(f"qubit count must be an integer, got {n!r}")
    if not 1 <= n <= MAX_QUBITS:
        raise InvalidWidthError(f"qubit count must be in 1..{MAX_QUBITS}, got {n}")
    return int(n)


def index_to_label(index: int, n: int) -> str:
    if not 0 <= index < (1 << n):
        raise InvalidWidthError(f"index {index} out of range for {n} qubits")
    return format(index, f"0{n}b")


def label_to_index(label: str) -> int:
    if not label or any(c not in "01" for c in label):
        raise InvalidStateError(f"not a binary label: {label!r}")
    return int(label, 2)


class StateVector:
    """Amplitudes of an ``n``-qubit register.

    ``amps`` is a contiguous complex128 array of length ``2**n``. Gates are
    applied with :func:`apply_gate` (returns a copy) or :meth:`apply_`
    (mutates this instance).
    """

    __slots__ = ("n", "amps")

    def __init__(self, n: int, amps, *, check_norm: bool = True):
        n = check_width(n)
        amps = np.ascontiguousarray(amps, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 1 << n:
            raise InvalidWidthError(
                f"expected {1 << n} amplitudes for {n} qubits, got {amps.shape[0]}"
            )
        if check_norm:
            norm = float(np.vdot(amps, amps).real)
            if abs(norm - 1.0) > 1e-9:
                raise InvalidStateError(f"state is not normalized (norm^2 = {norm})")
        self.n = n
        self.amps = amps

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    def copy(self) -> "StateVector":
        return StateVector(self.n, self.amps.copy(), check_norm=False)

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amps, self.amps).real))

    def apply_(self, gate) -> "StateVector":
        """Apply ``gate`` in place and return ``self``."""
        gate.validate(self.n)
        self.amps = gate.apply_to(self.amps, self.n)
        return self

    def label(self, index: int) -> str:
        return index_to_label(index, self.n)

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.amps, other.amps)

    def allclose(self, other: "StateVector", atol: float = 1e-10) -> bool:
        return self.n == other.n and bool(np.allclose(self.amps, other.amps, rtol=0, atol=atol))

    def __repr__(self):
        if self.n <= 4:
            return f"StateVector(n={self.n}, amps={np.array2string(self.amps, precision=4)})"
        return f"StateVector(n={self.n})"


def zero_state(n: int) -> StateVector:
    n = check_width(n)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(n, amps, check_norm=False)


def basis_state(n: int, index: int) -> StateVector:
    n = check_width(n)
    if not 0 <= index < (1 << n):
        raise InvalidStateError(f"basis index {index} out of range for {n} qubits")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(n, amps, check_norm=False)


def uniform_state(n: int) -> StateVector:
    n = check_width(n)
    amps = np.full(1 << n, 1.0 / np.sqrt(1 << n), dtype=np.complex128)
    return StateVector(n, amps, check_norm=False)


def apply_gate(state: StateVector, gate) -> StateVector:
    """Return a new state with ``gate`` applied; ``state`` is left untouched."""
    if not hasattr(gate, "apply_to"):
        raise InvalidGateError(f"not a gate: {gate!r}")
    out = state.copy()
    return out.apply_(gate)


def apply_circuit(state: StateVector, gates) -> StateVector:
    out = state.copy()
    for gate in gates:
        out.apply_(gate)
    return out


def probabilities(state: StateVector) -> np.ndarray:
    amps = state.amps
    return amps.real * amps.real + amps.imag * amps.imag


def sample(state: StateVector, shots: int, seed: Optional[int] = None) -> Dict[str, int]:
    """Draw ``shots`` measurements in the computational basis.

    Returns a histogram keyed by MSB-first label, containing only outcomes
    that occurred, in ascending label order.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    p = probabilities(state)
    p = p / p.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, p)
    nonzero = np.flatnonzero(counts)
    return {index_to_label(int(i), state.n): int(counts[i]) for i in nonzero}
