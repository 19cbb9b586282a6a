"""Statevector Grover search with compute/uncompute arithmetic oracles."""

from .errors import (
    GroverError,
    InvalidConstantError,
    InvalidCountError,
    InvalidGateError,
    InvalidPatternError,
    InvalidProblemError,
    InvalidStateError,
    InvalidWidthError,
    NoSolutionsError,
    UndefinedRatioError,
)
from .gates import (
    AddConst,
    Hadamard,
    PatternControlledZ,
    PauliX,
    PauliZ,
    add_const,
    decompose_pattern_z,
    hadamard_all,
    inverse,
    inverse_sequence,
    pattern_controlled_z,
)
from .grover import (
    GroverPlan,
    RunReport,
    Snapshot,
    apply_diffusion,
    diffusion_ladder,
    grover_iterations,
    run_grover,
    speedup_ratio,
)
from .kernels import BACKEND
from .oracle import (
    EquationProblem,
    Oracle,
    apply_oracle,
    build_equation_oracle,
    flipped_states,
    phase_table,
    uncompute_check,
)
from .statevector import (
    StateVector,
    apply_circuit,
    apply_gate,
    basis_state,
    index_to_label,
    label_to_index,
    probabilities,
    sample,
    uniform_state,
    zero_state,
)
from .verify import (
    SearchComparison,
    brute_force_search,
    closed_form_probability,
    compare_costs,
    sweep_table,
)

__version__ = "0.1.0"
