"""Iteration planning, the diffusion operator and the Grover search loop."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import kernels
from .errors import InvalidCountError, InvalidWidthError, NoSolutionsError, UndefinedRatioError
from .gates import Gate, PatternControlledZ, PauliX, hadamard_all
from .oracle import Oracle, apply_oracle_
from .statevector import StateVector, check_width, index_to_label, probabilities, zero_state


def _check_counts(N: int, l: int) -> None:
    if N < 2:
        raise InvalidCountError(f"state count must be >= 2, got {N}")
    if l == 0:
        raise NoSolutionsError("the search needs at least one solution (l >= 1)")
    if l < 0 or l > N:
        raise InvalidCountError(f"solution count {l} out of range 1..{N}")


def grover_iterations(N: int, l: int = 1) -> int:
    """Number of Grover iterations: floor(pi/4 * sqrt(N / l)).

    Returns 0 when the product is below 1 (l close to N).
    """
    _check_counts(N, l)
    return math.floor(math.pi / 4 * math.sqrt(N / l))


def speedup_ratio(N: int, l: int = 1) -> float:
    """Worst-case linear search cost over Grover cost, N / N_G."""
    iterations = grover_iterations(N, l)
    if iterations == 0:
        raise UndefinedRatioError(f"no Grover iterations planned for N={N}, l={l}")
    return N / iterations


@dataclass(frozen=True)
class GroverPlan:
    n: int
    N: int
    l: int
    N_G: int
    N_delta: Optional[float]

    @classmethod
    def for_register(cls, n: int, l: int = 1) -> "GroverPlan":
        N = 1 << n
        iterations = grover_iterations(N, l)
        ratio = N / iterations if iterations else None
        return cls(n=n, N=N, l=l, N_G=iterations, N_delta=ratio)


def apply_diffusion(state: StateVector) -> StateVector:
    """Reflect about the uniform superposition: amps -> 2*mean(amps) - amps."""
    out = state.copy()
    kernels.reflect_about_mean(out.amps)
    return out


def apply_diffusion_(state: StateVector) -> StateVector:
    kernels.reflect_about_mean(state.amps)
    return state


def diffusion_ladder(n: int) -> List[Gate]:
    """Gate form of the diffusion step: H, X, all-ones controlled Z, X, H.

    Equals the reflection about the uniform state times a global phase of -1.
    """
    xs = [PauliX(q) for q in range(n)]
    hs = hadamard_all(n)
    return [*hs, *xs, PatternControlledZ("1" * n), *xs, *hs]


@dataclass
class Snapshot:
    iteration: int
    stage: str
    amplitudes: np.ndarray
    probabilities: np.ndarray

    def marked_probability(self, mask: np.ndarray) -> float:
        return float(self.probabilities[mask].sum())


@dataclass
class RunReport:
    """Result of :func:`run_grover`.

    ``snapshots`` holds the state after initialization and after each full
    iteration. ``oracle_snapshots`` holds the state right after each oracle
    call (before diffusion), so the sign flip is visible.
    """

    plan: GroverPlan
    iterations: int
    snapshots: List[Snapshot]
    oracle_snapshots: List[Snapshot]
    final_distribution: np.ndarray
    argmax_label: str
    marked: np.ndarray = field(repr=False)

    @property
    def argmax_probability(self) -> float:
        return float(self.final_distribution[int(self.argmax_label, 2)])

    @property
    def marked_probability(self) -> float:
        return float(self.final_distribution[self.marked].sum())

    def trace(self) -> List[Snapshot]:
        """Initial snapshot, then oracle and diffusion snapshots interleaved."""
        out = [self.snapshots[0]]
        for after_oracle, after_diffusion in zip(self.oracle_snapshots, self.snapshots[1:]):
            out.append(after_oracle)
            out.append(after_diffusion)
        return out


def _snap(state: StateVector, iteration: int, stage: str) -> Snapshot:
    return Snapshot(iteration, stage, state.amps.copy(), probabilities(state))


def run_grover(
    n: int,
    oracle: Oracle,
    l: int = 1,
    iterations_override: Optional[int] = None,
    record: str = "all",
) -> RunReport:
    """Prepare the uniform superposition, then run oracle + diffusion iterations.

    ``record`` controls snapshot retention: ``"all"`` keeps every iteration,
    ``"ends"`` keeps only the initial and final snapshots (useful for wide
    registers where per-iteration copies would not fit in memory).
    """
    n = check_width(n)
    if oracle.n != n:
        raise InvalidWidthError(f"oracle has width {oracle.n}, register has {n}")
    if record not in ("all", "ends"):
        raise ValueError(f"record must be 'all' or 'ends', got {record!r}")
    plan = GroverPlan.for_register(n, l)
    if iterations_override is None:
        count = plan.N_G
    else:
        if iterations_override < 0:
            raise InvalidCountError(f"iteration count must be >= 0, got {iterations_override}")
        count = int(iterations_override)

    state = zero_state(n)
    for gate in hadamard_all(n):
        state.apply_(gate)

    snapshots = [_snap(state, 0, "init")]
    oracle_snapshots = []
    for k in range(1, count + 1):
        apply_oracle_(state, oracle)
        keep = record == "all"
        if keep:
            oracle_snapshots.append(_snap(state, k, "oracle"))
        apply_diffusion_(state)
        if keep or k == count:
            snapshots.append(_snap(state, k, "diffusion"))

    final = probabilities(state)
    return RunReport(
        plan=plan,
        iterations=count,
        snapshots=snapshots,
        oracle_snapshots=oracle_snapshots,
        final_distribution=final,
        argmax_label=index_to_label(int(np.argmax(final)), n),
        marked=oracle.marked_mask(),
    )
