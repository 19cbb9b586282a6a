"""Classical reference computations used to check the quantum pipeline."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, List

import numpy as np

from .grover import grover_iterations, speedup_ratio


@dataclass(frozen=True)
class SearchComparison:
    n: int
    classical_iterations: int
    grover_iterations: int
    speedup: float
    solutions: List[int] = field(default_factory=list)


def brute_force_search(predicate: Callable[[int], bool], n: int) -> List[int]:
    """Linear search over all 2**n inputs; every value is checked."""
    if not 0 <= n <= 24:
        raise ValueError(f"n must be in 0..24, got {n}")
    return [x for x in range(1 << n) if predicate(x)]


def closed_form_probability(N: int, l: int, k: int) -> float:
    """Probability of measuring a marked state after ``k`` Grover iterations."""
    if not 1 <= l <= N:
        raise ValueError(f"need 1 <= l <= N, got l={l}, N={N}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    theta = math.asin(math.sqrt(l / N))
    return math.sin((2 * k + 1) * theta) ** 2


def compare_costs(n: int, l: int = 1, solutions=None) -> SearchComparison:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    N = 1 << n
    return SearchComparison(
        n=n,
        classical_iterations=N,
        grover_iterations=grover_iterations(N, l),
        speedup=speedup_ratio(N, l),
        solutions=list(solutions or []),
    )


def sweep_table(max_bits: int, l: int = 1, min_bits: int = 2):
    """Rows ``(n, N, N_G, N_delta)`` for each register width.

    Widths with fewer states than ``l`` are skipped; widths where no
    iteration is planned report ``N_delta`` as None.
    """
    if not 2 <= max_bits <= 62:
        raise ValueError(f"max_bits must be in 2..62, got {max_bits}")
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    rows = []
    for n in range(min_bits, max_bits + 1):
        N = 1 << n
        if l > N:
            continue
        iterations = grover_iterations(N, l)
        rows.append((n, N, iterations, N / iterations if iterations else None))
    return rows


def marked_probabilities_by_iteration(report) -> np.ndarray:
    return np.array([s.probabilities[report.marked].sum() for s in report.snapshots])
