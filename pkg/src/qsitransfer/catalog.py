"""The eight named protocols as special cases of state transfer with QSI.

    channel     no QSI   Bob only   Alice only   both
    quantum     SC       FQSW       FQRS         SR
    classical   QT       SM         GQT          GSM
"""
from dataclasses import dataclass
from typing import List, Tuple

from .costs import CLASSICAL, CHANNEL_KINDS, QUANTUM, check_usage, costs_for

PROTOCOLS = {
    (QUANTUM, False, False): "SC",
    (QUANTUM, False, True): "FQSW",
    (QUANTUM, True, False): "FQRS",
    (QUANTUM, True, True): "SR",
    (CLASSICAL, False, False): "QT",
    (CLASSICAL, False, True): "SM",
    (CLASSICAL, True, False): "GQT",
    (CLASSICAL, True, True): "GSM",
}

FULL_NAMES = {
    "SC": "Schumacher compression",
    "FQSW": "fully quantum Slepian-Wolf",
    "FQRS": "fully quantum reverse Shannon",
    "SR": "state redistribution",
    "QT": "quantum teleportation",
    "SM": "state merging",
    "GQT": "generalized quantum teleportation",
    "GSM": "generalized state merging",
}


@dataclass(frozen=True)
class ProtocolTag:
    name: str
    channel_kind: str
    alice_uses: bool
    bob_uses: bool


def classify(usage, channel_kind) -> ProtocolTag:
    if channel_kind not in CHANNEL_KINDS:
        raise ValueError(f"channel kind must be one of {CHANNEL_KINDS}, got {channel_kind!r}")
    i, j = usage
    if i < 0 or j < 0:
        raise ValueError(f"usage must be non-negative, got {usage}")
    key = (channel_kind, i >= 1, j >= 1)
    return ProtocolTag(PROTOCOLS[key], *key)


@dataclass(frozen=True)
class CatalogRow:
    tag: ProtocolTag
    usage: Tuple[int, int]
    channel_rate: float
    ebit_rate: float
    note: str = ""


def _usages(partition):
    """Usage per (alice_uses, bob_uses) class available for this partition."""
    m, n = partition.m, partition.n
    out = [((False, False), (0, 0))]
    if n >= 1:
        out.append(((False, True), (0, 1)))
    if m >= 1:
        out.append(((True, False), (1, 0)))
    if m >= 1 and n >= 1:
        out.append(((True, True), (m, n)))
    return out


def catalog_report(state, partition) -> List[CatalogRow]:
    """Costs of every protocol the partition supports; quantum rows first.

    Single-QSI protocols (FQSW, FQRS, SM, GQT) use only A_1 or B_1; the row
    note says so when more systems are available. SR and GSM use all of them.
    """
    partition.validate_against(state)
    rows = []
    for kind in CHANNEL_KINDS:
        for (a_uses, b_uses), usage in _usages(partition):
            check_usage(partition, usage)
            tag = classify(usage, kind)
            note = ""
            if a_uses and not b_uses and partition.m > 1:
                note = "restricted to A_1"
            elif b_uses and not a_uses and partition.n > 1:
                note = "restricted to B_1"
            v = costs_for(state, partition, usage, kind)
            rows.append(CatalogRow(tag, usage, v.channel_rate, v.ebit_rate, note))
    return rows
