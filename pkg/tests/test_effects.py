import numpy as np
import oracle
import pytest

from qsitransfer import corpus, hilbert
from qsitransfer.costs import PartitionSpec
from qsitransfer.effects import (
    RESOURCE_TYPES,
    additional_effect,
    chain_rule_audit,
    effect,
    theorem1_check,
    theorem2_check,
)

GHZ4_BOB2 = PartitionSpec("q1", (), ("q2", "q3"), ("q4",))


def bell_with_alice():
    """C_A and A_1 share a Bell pair, B_1 and R another."""
    b = hilbert.bell()
    lay = hilbert.Layout.of(
        [("C", 2, "transfer"), ("A1", 2, "alice_qsi"), ("B1", 2, "bob_qsi"), ("R", 2, "reference")]
    )
    st = hilbert.MultipartiteState(lay, np.kron(b.rho, b.rho))
    return st, PartitionSpec("C", ("A1",), ("B1",), ("R",))


@pytest.mark.parametrize("o", RESOURCE_TYPES)
def test_no_usage_no_effect(ghz3, ghz3_partition, o):
    rep = effect(ghz3, ghz3_partition, o, (0, 0))
    assert (rep.by_definition, rep.closed_form, rep.alice_part, rep.bob_part) == (0, 0, 0, 0)


def test_ghz3_classical_effect(ghz3, ghz3_partition):
    rep = effect(ghz3, ghz3_partition, "c", (0, 1))
    assert rep.by_definition == pytest.approx(1.0, abs=1e-12)
    assert rep.closed_form == pytest.approx(1.0, abs=1e-12)
    assert rep.consistent()


def test_alice_bell_raises_entanglement_cost():
    st, p = bell_with_alice()
    rep = effect(st, p, "E", (1, 0))
    assert rep.by_definition == pytest.approx(-1.0, abs=1e-12)
    assert rep.alice_part == pytest.approx(-1.0, abs=1e-12)
    assert rep.bob_part == 0.0


def test_effect_rejects_bad_usage(ghz3, ghz3_partition):
    with pytest.raises(ValueError):
        effect(ghz3, ghz3_partition, "Q", (1, 0))
    with pytest.raises(ValueError, match="resource type"):
        effect(ghz3, ghz3_partition, "X", (0, 1))


def test_closed_forms_trivial_at_origin():
    st, p = bell_with_alice()
    checks = theorem1_check(st, p, 0, 0)
    assert all(c.passed and c.lhs == 0 and c.rhs == 0 for c in checks)


def test_closed_forms_ghz3(ghz3, ghz3_partition):
    checks = {c.name: c for c in theorem1_check(ghz3, ghz3_partition, 0, 1)}
    assert all(c.passed for c in checks.values())
    assert checks["B_1[c] = I_B"].lhs == pytest.approx(1.0)
    assert checks["B_1[e] = I_B"].lhs == pytest.approx(1.0)
    assert checks["2B_1[Q] = I_B"].lhs == pytest.approx(1.0)
    assert checks["2B_1[E] = I_B"].lhs == pytest.approx(1.0)


def test_closed_forms_corpus():
    for state, p in corpus.fourpartite_instances(30):
        for i in range(p.m + 1):
            for j in range(p.n + 1):
                bad = [c for c in theorem1_check(state, p, i, j) if not c.passed]
                assert not bad, bad


def test_closed_form_uses_oracle_informations():
    for state, p in corpus.fourpartite_instances(5):
        idx = {lab: k for k, lab in enumerate(state.labels)}
        c = [idx[p.transfer]]
        a = [idx[x] for x in p.alice_qsi]
        b = [idx[x] for x in p.bob_qsi]
        ia = oracle.mutual(state.rho, list(state.dims), c, a) if a else 0.0
        ib = oracle.mutual(state.rho, list(state.dims), c, b) if b else 0.0
        rep = effect(state, p, "c", (p.m, p.n))
        assert rep.closed_form == pytest.approx(ia + ib, abs=1e-10)


def test_additional_effect_same_usage_is_zero(ghz4):
    for o in RESOURCE_TYPES:
        rep = additional_effect(ghz4, GHZ4_BOB2, o, (0, 1), (0, 1))
        assert rep.by_definition == 0 and rep.closed_form == 0


def test_additional_bob_effect_ghz4(ghz4):
    rep = additional_effect(ghz4, GHZ4_BOB2, "c", (0, 1), (0, 2))
    assert abs(rep.by_definition) <= 1e-12
    assert abs(rep.closed_form) <= 1e-12


def test_additional_effect_ordering(ghz4):
    with pytest.raises(ValueError, match="start <= end"):
        additional_effect(ghz4, GHZ4_BOB2, "c", (0, 2), (0, 1))


def test_additional_effect_corpus():
    for state, p in corpus.fourpartite_instances(30):
        for o in RESOURCE_TYPES:
            rep = additional_effect(state, p, o, (0, min(1, p.n)), (p.m, p.n))
            assert rep.consistent(1e-8)
        assert all(c.passed for c in theorem2_check(state, p, (min(1, p.m), 0), (p.m, p.n)))


def test_additional_effect_alice_part_matches_oracle_qcmi():
    state, p = next(
        (s, q) for s, q in corpus.fourpartite_instances(10) if q.m == 2
    )
    idx = {lab: k for k, lab in enumerate(state.labels)}
    expected = oracle.conditional_mutual(
        state.rho, list(state.dims), [idx[p.transfer]], [idx[p.alice_qsi[1]]], [idx[p.alice_qsi[0]]]
    )
    rep = additional_effect(state, p, "c", (1, 0), (2, 0))
    assert rep.closed_alice == pytest.approx(expected, abs=1e-10)
    assert rep.alice_part == pytest.approx(expected, abs=1e-10)
    rep_e = additional_effect(state, p, "E", (1, 0), (2, 0))
    assert rep_e.alice_part == pytest.approx(-expected / 2, abs=1e-10)


def test_chain_single_group(ghz4):
    audit = chain_rule_audit(ghz4, "q1", [["q2", "q3"]], 1)
    assert audit.total == audit.telescoped == audit.split_sum


def test_chain_ghz4(ghz4):
    audit = chain_rule_audit(ghz4, "q1", ["q2", "q3"], 1)
    assert audit.total == pytest.approx(1.0, abs=1e-12)
    assert audit.terms == pytest.approx((1.0, 0.0), abs=1e-12)
    assert audit.agrees()


def test_chain_errors(ghz4):
    with pytest.raises(ValueError, match="disjoint"):
        chain_rule_audit(ghz4, "q1", ["q1", "q3"], 1)
    with pytest.raises(ValueError, match="split"):
        chain_rule_audit(ghz4, "q1", ["q2", "q3"], 3)


def test_chain_random_all_splits():
    for state in corpus.fourpartite(20):
        for k in (1, 2, 3):
            audit = chain_rule_audit(state, "q4", ["q1", "q3", "q2"], k)
            assert audit.residual <= 1e-8
