"""Phase oracles built as compute / phase flip / uncompute.

An oracle runs its compute gates, negates the amplitude of basis states whose
bits match ``pattern``, then runs the compute gates backwards with each gate
inverted. If the compute stage is a permutation, the net effect is the
diagonal map |x> -> (-1)^f(x) |x>.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .errors import InvalidProblemError, InvalidWidthError
from .gates import AddConst, Gate, PatternControlledZ, inverse_sequence
from .statevector import StateVector, apply_circuit, basis_state, check_width

EXHAUSTIVE_MAX_QUBITS = 10


@dataclass(frozen=True)
class Oracle:
    """A compute stage, a phase core and (by default) the mirrored uncompute stage.

    ``predicate`` is the classical function the oracle is meant to mark. It is
    never used by the simulation, only by verification. ``labels`` carries
    display annotations (for example the ``a``/``b`` constants of an equation)
    and has no effect on the circuit.
    """

    n: int
    compute: Tuple[Gate, ...]
    pattern: str
    predicate: Callable
    pattern_qubits: Optional[Tuple[int, ...]] = None
    uncompute: Optional[Tuple[Gate, ...]] = None
    labels: Dict[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        check_width(self.n)
        object.__setattr__(self, "compute", tuple(self.compute))
        if self.uncompute is None:
            object.__setattr__(self, "uncompute", tuple(inverse_sequence(self.compute)))
        else:
            object.__setattr__(self, "uncompute", tuple(self.uncompute))
        self.phase_core.validate(self.n)
        for gate in self.compute + self.uncompute:
            gate.validate(self.n)

    @property
    def phase_core(self) -> PatternControlledZ:
        return PatternControlledZ(self.pattern, self.pattern_qubits)

    def circuit(self) -> List[Gate]:
        return [*self.compute, self.phase_core, *self.uncompute]

    def without_phase_core(self) -> List[Gate]:
        return [*self.compute, *self.uncompute]

    def marked_mask(self) -> np.ndarray:
        """Boolean array over all basis indices, True where the predicate holds."""
        xs = np.arange(1 << self.n, dtype=np.int64)
        try:
            mask = np.asarray(self.predicate(xs), dtype=bool)
            if mask.shape == xs.shape:
                return mask
        except Exception:
            pass
        return np.fromiter((bool(self.predicate(int(x))) for x in xs), dtype=bool, count=xs.size)

    def marked_indices(self) -> List[int]:
        return [int(i) for i in np.flatnonzero(self.marked_mask())]


@dataclass(frozen=True)
class EquationProblem:
    """Find x with (x + a) mod 2**n == b."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        try:
            check_width(self.n)
        except InvalidWidthError as exc:
            raise InvalidProblemError(str(exc)) from None
        size = 1 << self.n
        for name, value in (("a", self.a), ("b", self.b)):
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise InvalidProblemError(f"{name} must be an integer, got {value!r}")
            if not 0 <= value < size:
                raise InvalidProblemError(f"{name}={value} out of range 0..{size - 1} for n={self.n}")

    @property
    def solution(self) -> int:
        return (self.b - self.a) % (1 << self.n)

    def predicate(self, x):
        return (x + self.a) % (1 << self.n) == self.b


def build_equation_oracle(problem: EquationProblem) -> Oracle:
    n, a, b = problem.n, problem.a, problem.b
    return Oracle(
        n=n,
        compute=(AddConst(a, 0, n),),
        pattern=format(b, f"0{n}b"),
        predicate=problem.predicate,
        labels={"a": format(a, f"0{n}b"), "b": format(b, f"0{n}b"), "X": "x"},
    )


def _check_match(state: StateVector, oracle: Oracle) -> None:
    if state.n != oracle.n:
        raise InvalidWidthError(f"state has {state.n} qubits, oracle expects {oracle.n}")


def apply_oracle(state: StateVector, oracle: Oracle) -> StateVector:
    _check_match(state, oracle)
    return apply_circuit(state, oracle.circuit())


def apply_oracle_(state: StateVector, oracle: Oracle) -> StateVector:
    """In-place variant of :func:`apply_oracle`."""
    _check_match(state, oracle)
    for gate in oracle.circuit():
        state.apply_(gate)
    return state


def _basis_indices(n: int, rng_seed: int = 0, samples: int = 256):
    if n <= EXHAUSTIVE_MAX_QUBITS:
        return range(1 << n)
    rng = np.random.default_rng(rng_seed)
    return sorted(set(int(i) for i in rng.integers(0, 1 << n, size=samples)))


def uncompute_check(oracle: Oracle, atol: float = 1e-10) -> bool:
    """True iff compute followed by uncompute fixes every basis state.

    Exhaustive up to 10 qubits; wider registers are checked on a fixed
    random sample of basis states.
    """
    gates = oracle.without_phase_core()
    for i in _basis_indices(oracle.n):
        ket = basis_state(oracle.n, i)
        out = apply_circuit(ket, gates)
        if not out.allclose(ket, atol=atol):
            return False
    return True


def phase_table(oracle: Oracle, atol: float = 1e-10) -> np.ndarray:
    """Diagonal of the oracle's unitary, checked column by column.

    Raises ``ValueError`` if any basis state is mapped off its own axis.
    """
    if oracle.n > EXHAUSTIVE_MAX_QUBITS:
        raise InvalidWidthError(f"phase table is exhaustive; n={oracle.n} is too wide")
    circuit = oracle.circuit()
    diag = np.empty(1 << oracle.n, dtype=np.complex128)
    for i in range(1 << oracle.n):
        out = apply_circuit(basis_state(oracle.n, i), circuit).amps
        d = out[i]
        out[i] = 0.0
        if np.max(np.abs(out), initial=0.0) > atol:
            raise ValueError(f"oracle is not diagonal: basis state {i} leaks amplitude")
        diag[i] = d
    return diag


def flipped_states(oracle: Oracle, atol: float = 1e-10) -> List[int]:
    """Basis indices the oracle negates; every other index must be left at +1."""
    diag = phase_table(oracle, atol)
    neg = np.abs(diag + 1.0) <= atol
    pos = np.abs(diag - 1.0) <= atol
    if not np.all(neg | pos):
        raise ValueError("oracle phases are not all +1 or -1")
    return [int(i) for i in np.flatnonzero(neg)]
