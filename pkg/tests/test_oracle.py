import numpy as np
import pytest

from groverkit import (
    AddConst,
    EquationProblem,
    InvalidProblemError,
    InvalidWidthError,
    Oracle,
    apply_oracle,
    basis_state,
    brute_force_search,
    build_equation_oracle,
    flipped_states,
    uncompute_check,
    uniform_state,
    zero_state,
)

from conftest import random_state


def oracle(n, a, b):
    return build_equation_oracle(EquationProblem(n, a, b))


def test_two_qubit_example_marks_01():
    o = oracle(2, 2, 3)
    assert o.pattern == "11"
    assert o.compute == (AddConst(2, 0, 2),)
    assert o.uncompute == (AddConst(2, 0, 2),)
    assert o.marked_indices() == [1]
    assert flipped_states(o) == [1]


def test_three_qubit_example_marks_001():
    o = oracle(3, 5, 6)
    assert o.pattern == "110"
    assert o.uncompute == (AddConst(3, 0, 3),)
    assert flipped_states(o) == [1]


def test_trivial_problem_marks_zero():
    assert flipped_states(oracle(2, 0, 0)) == [0]


def test_labels_are_annotations_only():
    o = oracle(2, 2, 3)
    assert o.labels == {"a": "10", "b": "11", "X": "x"}
    bare = Oracle(2, o.compute, o.pattern, o.predicate)
    assert bare == o
    np.testing.assert_array_equal(
        apply_oracle(uniform_state(2), bare).amps, apply_oracle(uniform_state(2), o).amps
    )


def test_apply_oracle_on_uniform():
    out = apply_oracle(uniform_state(2), oracle(2, 2, 3))
    # brute force: push every basis state through the three gates by hand
    expected = np.empty(4)
    for x in range(4):
        shifted = (x + 2) % 4
        sign = -1 if shifted == 3 else 1
        assert (shifted - 2) % 4 == x
        expected[x] = 0.5 * sign
    np.testing.assert_allclose(out.amps, expected, atol=1e-15)
    np.testing.assert_allclose(out.amps, [0.5, -0.5, 0.5, 0.5], atol=1e-15)


def test_apply_oracle_on_basis_states():
    o = oracle(2, 2, 3)
    np.testing.assert_array_equal(apply_oracle(basis_state(2, 1), o).amps, [0, -1, 0, 0])
    np.testing.assert_array_equal(apply_oracle(basis_state(2, 0), o).amps, [1, 0, 0, 0])


def test_apply_oracle_width_mismatch():
    with pytest.raises(InvalidWidthError):
        apply_oracle(zero_state(3), oracle(2, 2, 3))


@pytest.mark.parametrize("n,a,b", [(2, 4, 0), (2, 0, -1), (3, 8, 1), (0, 0, 0), (25, 0, 0)])
def test_invalid_problem(n, a, b):
    with pytest.raises(InvalidProblemError):
        EquationProblem(n, a, b)


def test_uncompute_check():
    assert uncompute_check(oracle(2, 2, 3))
    assert uncompute_check(oracle(3, 5, 6))
    dropped = Oracle(2, (AddConst(2, 0, 2),), "11", lambda x: x == 1, uncompute=())
    assert not uncompute_check(dropped)


def test_uncompute_check_wide_register_samples():
    assert uncompute_check(oracle(12, 1234, 77))


@pytest.mark.parametrize("n", range(1, 9))
def test_oracle_diagonal_and_sign_matches_predicate(n):
    rng = np.random.default_rng(n)
    for _ in range(8):
        a, b = (int(v) for v in rng.integers(0, 1 << n, size=2))
        o = oracle(n, a, b)
        for x in range(1 << n):
            out = apply_oracle(basis_state(n, x), o).amps
            sign = -1.0 if (x + a) % (1 << n) == b else 1.0
            assert abs(out[x] - sign) <= 1e-12
            out[x] = 0
            assert np.max(np.abs(out)) <= 1e-12


@pytest.mark.parametrize("n", range(1, 5))
def test_oracle_matches_brute_force_exhaustive_small(n):
    for a in range(1 << n):
        for b in range(1 << n):
            o = oracle(n, a, b)
            expected = brute_force_search(lambda x: (x + a) % (1 << n) == b, n)
            assert flipped_states(o) == expected == [EquationProblem(n, a, b).solution]


def test_oracle_is_an_involution(rng):
    o = oracle(5, 19, 3)
    s = random_state(5, rng)
    np.testing.assert_allclose(apply_oracle(apply_oracle(s, o), o).amps, s.amps, atol=1e-10)


def test_open_oracle_interface_multi_marked():
    # marks every x whose top bit is 1 and bit 0 is 0
    o = Oracle(3, (), "10", lambda x: (x >> 2) & 1 == 1 and x & 1 == 0, pattern_qubits=(2, 0))
    assert flipped_states(o) == [4, 6] == o.marked_indices()
