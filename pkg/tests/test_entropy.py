import numpy as np
import oracle
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsitransfer import hilbert
from qsitransfer.entropy import fidelity, qcmi, qmi, von_neumann
from qsitransfer.hilbert import Layout, MultipartiteState

W3_QUBIT_ENTROPY = 0.9182958340544896  # -(1/3)log2(1/3) - (2/3)log2(2/3)


def qubit(rho, label="a"):
    return MultipartiteState(Layout.of([(label, 2, "transfer")]), rho)


def test_pure_state_full_entropy_zero(ghz3):
    assert abs(von_neumann(ghz3, ghz3.labels)) <= 1e-9


def test_maximally_mixed_one_bit():
    assert von_neumann(qubit(np.eye(2) / 2), "a") == pytest.approx(1.0, abs=1e-12)


def test_w3_single_qubit_entropy():
    assert von_neumann(hilbert.w(3), ["q1"]) == pytest.approx(W3_QUBIT_ENTROPY, abs=1e-12)


def test_entropy_unknown_label(ghz3):
    with pytest.raises(KeyError):
        von_neumann(ghz3, ["zz"])


def test_entropy_matches_oracle():
    st = hilbert.random_mixed((2, 3, 2), 3, 31)
    for keep in ([0], [1], [0, 2], [1, 2], [0, 1, 2]):
        labels = [st.labels[k] for k in keep]
        assert von_neumann(st, labels) == pytest.approx(
            oracle.entropy(st.rho, [2, 3, 2], keep), abs=1e-10
        )


def test_qmi_product_is_zero():
    a = hilbert.random_mixed((2,), 2, 1, labels=("x",))
    b = hilbert.random_mixed((3,), 2, 2, labels=("y",), roles=("reference",))
    assert abs(qmi(hilbert.product(a, b), "x", "y")) <= 1e-12


def test_qmi_bell_two_bits():
    assert qmi(hilbert.bell(), "A", "B") == pytest.approx(2.0, abs=1e-12)


def test_qmi_ghz3_pair(ghz3):
    assert qmi(ghz3, "q1", "q2") == pytest.approx(1.0, abs=1e-12)


def test_qmi_overlap_rejected(ghz3):
    with pytest.raises(ValueError, match="appears in both"):
        qmi(ghz3, ["q1", "q2"], ["q2"])


def test_qcmi_empty_condition_is_qmi(ghz3):
    assert qcmi(ghz3, "q1", "q2") == qmi(ghz3, "q1", "q2")


def test_qcmi_ghz4_is_zero(ghz4):
    assert abs(qcmi(ghz4, "q1", "q3", "q2")) <= 1e-12


def test_qcmi_ghz3_one_bit(ghz3):
    assert qcmi(ghz3, "q1", "q2", "q3") == pytest.approx(1.0, abs=1e-12)


def test_qcmi_matches_oracle():
    st = hilbert.random_mixed((2, 2, 2, 2), 2, 8)
    got = qcmi(st, ["q1"], ["q3", "q4"], ["q2"])
    assert got == pytest.approx(oracle.conditional_mutual(st.rho, [2] * 4, [0], [2, 3], [1]), abs=1e-10)


def test_fidelity_examples():
    rho = hilbert.random_mixed((2, 2), 2, 3)
    assert fidelity(rho, rho) == pytest.approx(1.0, abs=1e-9)
    zero = qubit(np.diag([1.0, 0.0]))
    one = qubit(np.diag([0.0, 1.0]))
    assert fidelity(zero, one) == pytest.approx(0.0, abs=1e-12)
    mixed = MultipartiteState(hilbert.bell().layout, np.eye(4) / 4)
    assert fidelity(hilbert.bell(), mixed) == pytest.approx(0.5, abs=1e-12)


def test_fidelity_matches_oracle_and_is_symmetric():
    a = hilbert.random_mixed((2, 3), 2, 10)
    b = hilbert.random_mixed((2, 3), 4, 11)
    f = fidelity(a, b)
    assert f == pytest.approx(oracle.root_fidelity(a.rho, b.rho), abs=1e-10)
    assert abs(f - fidelity(b, a)) <= 1e-10


def test_fidelity_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        fidelity(hilbert.bell(), hilbert.ghz(3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31), st.sampled_from([(2, 2, 2), (2, 3, 2)]), st.integers(1, 6))
def test_strong_subadditivity(seed, dims, rank):
    s = hilbert.random_mixed(dims, rank, seed)
    assert qcmi(s, "q1", "q3", "q2") >= -1e-8


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31))
def test_qmi_symmetry_and_permutation_invariance(seed):
    s = hilbert.random_mixed((2, 3, 2), 2, seed)
    assert abs(qmi(s, "q1", ["q2", "q3"]) - qmi(s, ["q3", "q2"], "q1")) <= 1e-10
    p = hilbert.permute(s, ["q3", "q1", "q2"])
    for labels in (["q1"], ["q2", "q3"], ["q1", "q3"]):
        assert abs(von_neumann(s, labels) - von_neumann(p, labels)) <= 1e-10
    r = hilbert.relabel(s, labels=["x", "y", "z"])
    assert abs(von_neumann(r, ["x", "z"]) - von_neumann(s, ["q1", "q3"])) <= 1e-10


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31), st.integers(1, 3), st.integers(1, 4))
def test_entropy_additive_on_products(seed, ra, rb):
    a = hilbert.random_mixed((2, 2), ra, seed, labels=("a1", "a2"), roles=("transfer", "reference"))
    b = hilbert.random_mixed((3,), rb, seed + 1, labels=("b",), roles=("reference",))
    ab = hilbert.product(a, b)
    total = von_neumann(ab, ab.labels)
    assert abs(total - von_neumann(a, a.labels) - von_neumann(b, b.labels)) <= 1e-9
