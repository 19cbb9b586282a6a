"""Reversible gate set: Hadamard, Pauli X/Z, pattern-controlled Z, add-constant.

Gates are frozen dataclasses describing an operation; ``apply_to`` runs the
matching kernel on a raw amplitude buffer. Every gate has an inverse in the
same set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from . import kernels
from .errors import InvalidConstantError, InvalidGateError, InvalidPatternError
from .statevector import StateVector, apply_gate


def _check_qubit(q, n):
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)):
        raise InvalidGateError(f"qubit index must be an integer, got {q!r}")
    if not 0 <= q < n:
        raise InvalidGateError(f"qubit {q} out of range for a {n}-qubit register")


@dataclass(frozen=True)
class Hadamard:
    target: int

    def touched(self, n: int) -> Tuple[int, ...]:
        return (self.target,)

    def validate(self, n: int) -> None:
        _check_qubit(self.target, n)

    def apply_to(self, amps: np.ndarray, n: int) -> np.ndarray:
        kernels.hadamard(amps, self.target)
        return amps

    def inverse(self) -> "Hadamard":
        return self


@dataclass(frozen=True)
class PauliX:
    target: int

    def touched(self, n: int) -> Tuple[int, ...]:
        return (self.target,)

    def validate(self, n: int) -> None:
        _check_qubit(self.target, n)

    def apply_to(self, amps: np.ndarray, n: int) -> np.ndarray:
        kernels.pauli_x(amps, self.target)
        return amps

    def inverse(self) -> "PauliX":
        return self


@dataclass(frozen=True)
class PauliZ:
    target: int

    def touched(self, n: int) -> Tuple[int, ...]:
        return (self.target,)

    def validate(self, n: int) -> None:
        _check_qubit(self.target, n)

    def apply_to(self, amps: np.ndarray, n: int) -> np.ndarray:
        kernels.pauli_z(amps, self.target)
        return amps

    def inverse(self) -> "PauliZ":
        return self


@dataclass(frozen=True)
class PatternControlledZ:
    """Negate the amplitude of basis states whose constrained bits equal ``pattern``.

    ``pattern`` is read MSB-first against ``qubits``; ``qubits[0]`` is matched
    by ``pattern[0]``. With ``qubits=None`` the pattern covers the whole
    register (``qubits = (n-1, ..., 0)``), so ``pattern`` reads exactly like
    a basis label. An all-ones pattern is the plain multi-controlled Z.
    """

    pattern: str
    qubits: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if any(c not in "01" for c in self.pattern):
            raise InvalidPatternError(f"pattern must be a binary string, got {self.pattern!r}")
        if self.qubits is not None:
            object.__setattr__(self, "qubits", tuple(self.qubits))
            if len(self.qubits) != len(self.pattern):
                raise InvalidPatternError(
                    f"pattern {self.pattern!r} has {len(self.pattern)} bits "
                    f"but constrains {len(self.qubits)} qubits"
                )

    def qubits_for(self, n: int) -> Tuple[int, ...]:
        if self.qubits is None:
            return tuple(range(n - 1, -1, -1))
        return self.qubits

    def touched(self, n: int) -> Tuple[int, ...]:
        return self.qubits_for(n)

    def validate(self, n: int) -> None:
        if self.qubits is None and len(self.pattern) != n:
            raise InvalidPatternError(
                f"full-register pattern {self.pattern!r} needs {n} bits, has {len(self.pattern)}"
            )
        qs = self.qubits_for(n)
        for q in qs:
            _check_qubit(q, n)
        if len(set(qs)) != len(qs):
            raise InvalidGateError(f"repeated qubit in {qs}")

    def mask_value(self, n: int) -> Tuple[int, int]:
        mask = value = 0
        for q, bit in zip(self.qubits_for(n), self.pattern):
            mask |= 1 << q
            if bit == "1":
                value |= 1 << q
        return mask, value

    def apply_to(self, amps: np.ndarray, n: int) -> np.ndarray:
        mask, value = self.mask_value(n)
        kernels.phase_flip_masked(amps, mask, value)
        return amps

    def inverse(self) -> "PatternControlledZ":
        return self


@dataclass(frozen=True)
class AddConst:
    """In-place modular adder on a contiguous qubit range.

    The ``width`` qubits starting at ``start`` (``start`` is the LSB) hold an
    unsigned integer x, mapped to (x + k) mod 2**width.
    """

    k: int
    start: int
    width: int

    def __post_init__(self):
        if self.width < 1:
            raise InvalidGateError(f"adder width must be >= 1, got {self.width}")
        if not 0 <= self.k < (1 << self.width):
            raise InvalidConstantError(
                f"constant {self.k} out of range for a {self.width}-qubit adder"
            )

    def touched(self, n: int) -> Tuple[int, ...]:
        return tuple(range(self.start, self.start + self.width))

    def validate(self, n: int) -> None:
        if self.start < 0 or self.start + self.width > n:
            raise InvalidGateError(
                f"adder range [{self.start}, {self.start + self.width}) exceeds {n} qubits"
            )

    def apply_to(self, amps: np.ndarray, n: int) -> np.ndarray:
        if self.k == 0:
            return amps
        return kernels.add_const(amps, self.k, self.start, self.width)

    def inverse(self) -> "AddConst":
        return AddConst(-self.k % (1 << self.width), self.start, self.width)


Gate = Union[Hadamard, PauliX, PauliZ, PatternControlledZ, AddConst]


def inverse(gate: Gate) -> Gate:
    return gate.inverse()


def inverse_sequence(gates: Sequence[Gate]) -> List[Gate]:
    """Undo a gate sequence: inverses in reverse order."""
    return [g.inverse() for g in reversed(gates)]


def hadamard_all(n: int) -> List[Hadamard]:
    return [Hadamard(q) for q in range(n)]


def decompose_pattern_z(gate: PatternControlledZ, n: int) -> List[Gate]:
    """Rewrite a pattern-controlled Z as X-conjugation around an all-ones controlled Z."""
    gate.validate(n)
    qs = gate.qubits_for(n)
    flips = [PauliX(q) for q, bit in zip(qs, gate.pattern) if bit == "0"]
    core = PatternControlledZ("1" * len(qs), qs)
    return flips + [core] + flips


def _target_range(targets, n):
    if targets is None:
        return 0, n
    if isinstance(targets, range):
        if targets.step != 1 or len(targets) == 0:
            raise InvalidGateError(f"adder targets must be a non-empty contiguous range, got {targets}")
        return targets.start, len(targets)
    start, width = targets
    return start, width


def add_const(state: StateVector, k: int, targets=None) -> StateVector:
    """Add ``k`` modulo ``2**m`` to the register slice ``targets``.

    ``targets`` is a ``range`` of qubits, a ``(start, width)`` pair, or None
    for the whole register.
    """
    start, width = _target_range(targets, state.n)
    return apply_gate(state, AddConst(k, start, width))


def pattern_controlled_z(state: StateVector, pattern: str) -> StateVector:
    return apply_gate(state, PatternControlledZ(pattern))
