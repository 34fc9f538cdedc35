import pytest

from qsitransfer import corpus, hilbert
from qsitransfer.catalog import PROTOCOLS, catalog_report, classify
from qsitransfer.costs import PartitionSpec, costs_for


@pytest.mark.parametrize(
    "usage, kind, name",
    [
        ((0, 0), "quantum", "SC"),
        ((0, 1), "quantum", "FQSW"),
        ((1, 0), "quantum", "FQRS"),
        ((2, 3), "quantum", "SR"),
        ((0, 0), "classical", "QT"),
        ((0, 2), "classical", "SM"),
        ((1, 0), "classical", "GQT"),
        ((1, 1), "classical", "GSM"),
    ],
)
def test_classify(usage, kind, name):
    tag = classify(usage, kind)
    assert tag.name == name
    assert (tag.alice_uses, tag.bob_uses) == (usage[0] >= 1, usage[1] >= 1)
    assert PROTOCOLS[(kind, tag.alice_uses, tag.bob_uses)] == name


def test_classify_rejects_kind():
    with pytest.raises(ValueError):
        classify((0, 0), "carrier-pigeon")


def _rows(state, p):
    return {r.tag.name: r for r in catalog_report(state, p)}


def test_bell_only_sc_and_qt(bell_cr):
    rows = _rows(bell_cr, PartitionSpec("C", reference=("R",)))
    assert set(rows) == {"SC", "QT"}
    assert (rows["SC"].channel_rate, rows["SC"].ebit_rate) == pytest.approx((1, 0), abs=1e-12)
    assert (rows["QT"].channel_rate, rows["QT"].ebit_rate) == pytest.approx((2, 1), abs=1e-12)


def test_ghz3_state_merging_row(ghz3, ghz3_partition):
    rows = _rows(ghz3, ghz3_partition)
    assert set(rows) == {"SC", "FQSW", "QT", "SM"}
    assert (rows["SM"].channel_rate, rows["SM"].ebit_rate) == pytest.approx((1, 0), abs=1e-12)
    assert (rows["FQSW"].channel_rate, rows["FQSW"].ebit_rate) == pytest.approx((0.5, -0.5), abs=1e-12)


def test_eight_rows_for_four_party_states():
    for state in corpus.fourpartite(10):
        p = PartitionSpec("q2", ("q1",), ("q3",), ("q4",))
        rows = _rows(state, p)
        assert len(rows) == 8
        for q, c in (("SC", "QT"), ("FQSW", "SM"), ("FQRS", "GQT"), ("SR", "GSM")):
            assert rows[c].channel_rate == pytest.approx(2 * rows[q].channel_rate, abs=1e-10)
            assert rows[c].ebit_rate == pytest.approx(rows[q].channel_rate + rows[q].ebit_rate, abs=1e-10)
        assert rows["FQRS"].ebit_rate >= -1e-9
        assert rows["FQSW"].ebit_rate <= 1e-9
        for r in rows.values():
            v = costs_for(state, p, r.usage, r.tag.channel_kind)
            assert abs(v.channel_rate - r.channel_rate) <= 1e-12
            assert abs(v.ebit_rate - r.ebit_rate) <= 1e-12


def test_multi_qsi_rows_are_restricted():
    st = hilbert.ghz(5)
    p = PartitionSpec("q1", ("q2", "q3"), ("q4",), ("q5",))
    rows = _rows(st, p)
    assert rows["FQRS"].usage == (1, 0) and rows["FQRS"].note == "restricted to A_1"
    assert rows["FQSW"].note == ""
    assert rows["SR"].usage == (2, 1) and rows["GSM"].usage == (2, 1)
