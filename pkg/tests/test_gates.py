import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groverkit import (
    AddConst,
    Hadamard,
    InvalidConstantError,
    InvalidGateError,
    InvalidPatternError,
    PatternControlledZ,
    PauliX,
    PauliZ,
    StateVector,
    add_const,
    apply_circuit,
    apply_gate,
    basis_state,
    decompose_pattern_z,
    hadamard_all,
    inverse,
    pattern_controlled_z,
    probabilities,
    uniform_state,
    zero_state,
)

from conftest import random_state

H1 = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
X1 = np.array([[0, 1], [1, 0]])
Z1 = np.diag([1, -1])


def dense_single(op, q, n):
    """Full 2**n matrix of a one-qubit op, qubit 0 = LSB."""
    out = np.eye(1)
    for k in range(n - 1, -1, -1):
        out = np.kron(out, op if k == q else np.eye(2))
    return out


def dense_add_const(k, start, width, n):
    m = np.zeros((1 << n, 1 << n))
    for i in range(1 << n):
        x = (i >> start) % (1 << width)
        rest = i - (x << start)
        j = rest + (((x + k) % (1 << width)) << start)
        m[j, i] = 1
    return m


def dense_pattern_z(pattern, qubits, n):
    d = np.ones(1 << n)
    for i in range(1 << n):
        bits = "".join(str((i >> q) & 1) for q in qubits)
        if bits == pattern:
            d[i] = -1
    return np.diag(d)


def random_gate(draw, n):
    kind = draw(st.sampled_from(["h", "x", "z", "pz", "add"]))
    if kind in ("h", "x", "z"):
        q = draw(st.integers(0, n - 1))
        return {"h": Hadamard, "x": PauliX, "z": PauliZ}[kind](q)
    if kind == "pz":
        qs = draw(st.permutations(range(n)))
        size = draw(st.integers(1, n))
        qs = tuple(qs[:size])
        pattern = "".join(draw(st.sampled_from("01")) for _ in qs)
        return PatternControlledZ(pattern, qs)
    start = draw(st.integers(0, n - 1))
    width = draw(st.integers(1, n - start))
    return AddConst(draw(st.integers(0, (1 << width) - 1)), start, width)


@st.composite
def circuits(draw, max_n=6, max_len=12):
    n = draw(st.integers(1, max_n))
    gates = [random_gate(draw, n) for _ in range(draw(st.integers(1, max_len)))]
    seed = draw(st.integers(0, 2**32 - 1))
    return n, gates, seed


def dense(gate, n):
    if isinstance(gate, Hadamard):
        return dense_single(H1, gate.target, n)
    if isinstance(gate, PauliX):
        return dense_single(X1, gate.target, n)
    if isinstance(gate, PauliZ):
        return dense_single(Z1, gate.target, n)
    if isinstance(gate, AddConst):
        return dense_add_const(gate.k, gate.start, gate.width, n)
    return dense_pattern_z(gate.pattern, gate.qubits_for(n), n)


@settings(max_examples=150, deadline=None)
@given(circuits())
def test_gates_match_dense_matrices(case):
    n, gates, seed = case
    s = random_state(n, np.random.default_rng(seed))
    expected = s.amps.copy()
    for g in gates:
        expected = dense(g, n) @ expected
    np.testing.assert_allclose(apply_circuit(s, gates).amps, expected, atol=1e-12)


@settings(max_examples=150, deadline=None)
@given(circuits())
def test_norm_preserved_after_every_gate(case):
    n, gates, seed = case
    s = random_state(n, np.random.default_rng(seed))
    for g in gates:
        s = apply_gate(s, g)
        assert abs(s.norm() - 1.0) <= 1e-12


@settings(max_examples=150, deadline=None)
@given(circuits(max_len=1))
def test_every_gate_undone_by_its_inverse(case):
    n, (gate,), seed = case
    s = random_state(n, np.random.default_rng(seed))
    back = apply_gate(apply_gate(s, gate), inverse(gate))
    np.testing.assert_allclose(back.amps, s.amps, atol=1e-10)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hadamard_all_gives_uniform(n):
    s = apply_circuit(zero_state(n), hadamard_all(n))
    np.testing.assert_allclose(s.amps, np.full(1 << n, 1 / np.sqrt(1 << n)), atol=1e-15)


def test_hadamard_all_twice_is_identity(rng):
    for n in range(1, 7):
        s = random_state(n, rng)
        out = apply_circuit(s, hadamard_all(n) * 2)
        np.testing.assert_allclose(out.amps, s.amps, atol=1e-10)


def test_add_const_examples():
    out = add_const(basis_state(2, 0b01), 2)
    np.testing.assert_array_equal(out.amps, basis_state(2, 0b11).amps)
    out = add_const(basis_state(2, 0b10), 3)
    np.testing.assert_array_equal(out.amps, basis_state(2, 0b01).amps)


def test_add_const_zero_is_identity(rng):
    s = random_state(3, rng)
    np.testing.assert_array_equal(add_const(s, 0).amps, s.amps)


def test_add_const_sub_range():
    # adds to qubits 1..2 only; qubit 0 rides along
    out = add_const(basis_state(3, 0b011), 1, targets=range(1, 3))
    np.testing.assert_array_equal(out.amps, basis_state(3, 0b101).amps)


@pytest.mark.parametrize("k", [-1, 4, 100])
def test_add_const_rejects_constant(k):
    with pytest.raises(InvalidConstantError):
        add_const(zero_state(2), k)


def test_add_const_rejects_range():
    with pytest.raises(InvalidGateError):
        apply_gate(zero_state(2), AddConst(1, 1, 2))


@pytest.mark.parametrize("m", range(1, 7))
def test_add_then_complement_is_identity_exhaustive(m):
    for k in range(1 << m):
        gates = [AddConst(k, 0, m), AddConst(((1 << m) - k) % (1 << m), 0, m)]
        for x in range(1 << m):
            out = apply_circuit(basis_state(m, x), gates)
            assert out.amps[x] == 1.0


def test_add_const_permutes_probabilities(rng):
    s = random_state(5, rng)
    out = add_const(s, 13)
    np.testing.assert_allclose(np.sort(probabilities(out)), np.sort(probabilities(s)), atol=0)


def test_pattern_z_examples():
    out = pattern_controlled_z(uniform_state(2), "10")
    np.testing.assert_allclose(out.amps, [0.5, 0.5, -0.5, 0.5])
    out = pattern_controlled_z(StateVector(1, [1, 0]), "0")
    np.testing.assert_array_equal(out.amps, [-1, 0])


def test_pattern_z_twice_restores(rng):
    s = random_state(4, rng)
    out = pattern_controlled_z(pattern_controlled_z(s, "0110"), "0110")
    np.testing.assert_array_equal(out.amps, s.amps)


def test_pattern_z_length_mismatch():
    with pytest.raises(InvalidPatternError):
        pattern_controlled_z(zero_state(3), "10")
    with pytest.raises(InvalidPatternError):
        PatternControlledZ("1x")
    with pytest.raises(InvalidPatternError):
        PatternControlledZ("101", (0, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_pattern_z_is_diagonal(n):
    for pattern_value in range(1 << n):
        pattern = format(pattern_value, f"0{n}b")
        for x in range(1 << n):
            out = pattern_controlled_z(basis_state(n, x), pattern).amps
            sign = -1.0 if x == pattern_value else 1.0
            assert out[x] == sign
            assert np.count_nonzero(out) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_pattern_z_decomposition_matches(n, rng):
    s = random_state(n, rng)
    for pattern_value in range(1 << n):
        gate = PatternControlledZ(format(pattern_value, f"0{n}b"))
        ladder = decompose_pattern_z(gate, n)
        core = ladder[len(ladder) // 2]
        assert core.pattern == "1" * n
        assert all(isinstance(g, PauliX) for g in ladder if g != core)
        np.testing.assert_allclose(apply_circuit(s, ladder).amps, apply_gate(s, gate).amps, atol=1e-12)


def test_inverse_examples():
    assert inverse(AddConst(2, 0, 2)) == AddConst(2, 0, 2)
    assert inverse(AddConst(5, 0, 3)) == AddConst(3, 0, 3)
    assert inverse(AddConst(0, 0, 3)) == AddConst(0, 0, 3)
    assert inverse(Hadamard(1)) == Hadamard(1)
    assert inverse(PauliX(0)) == PauliX(0)
    assert inverse(PatternControlledZ("01")) == PatternControlledZ("01")


def test_backends_agree(rng):
    from groverkit.kernels import BACKENDS

    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    py, cy = BACKENDS["python"], BACKENDS["cython"]
    n = 9
    for name, args in [
        ("hadamard", (0,)), ("hadamard", (5,)), ("hadamard", (8,)),
        ("pauli_x", (3,)), ("pauli_z", (7,)),
        ("phase_flip_masked", (0b101100000, 0b100100000)),
        ("phase_flip_masked", ((1 << n) - 1, 77)),
        ("phase_flip_masked", (0, 0)),
        ("reflect_about_mean", ()),
    ]:
        s = random_state(n, rng).amps
        a, b = s.copy(), s.copy()
        getattr(py, name)(a, *args)
        getattr(cy, name)(b, *args)
        np.testing.assert_allclose(a, b, atol=1e-14, err_msg=name)
    s = random_state(n, rng).amps
    for k, lo, m in [(5, 0, 9), (3, 2, 4), (1, 8, 1), (200, 1, 8)]:
        np.testing.assert_array_equal(py.add_const(s, k, lo, m), cy.add_const(s, k, lo, m))
