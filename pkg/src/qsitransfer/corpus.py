"""Seeded state corpora for property checks and benchmarks.

Every state is fully determined by ``(base_seed, index)``; regenerating a
corpus gives bit-identical matrices.
"""
from .costs import PartitionSpec
from .hilbert import bell, ghz, random_mixed, relabel, w, werner

TRIPARTITE_SEED = 20_240_501
FOURPARTITE_SEED = 20_240_502
RECOVERY_SEED = 20_240_503

# (transfer, alice_qsi, bob_qsi, reference) over labels q1..q4
FOURPARTITE_PARTITIONS = (
    PartitionSpec("q1", ("q2",), ("q3",), ("q4",)),
    PartitionSpec("q1", ("q2", "q3"), ("q4",)),
    PartitionSpec("q2", (), ("q1", "q3"), ("q4",)),
    PartitionSpec("q3", ("q4", "q1"), ("q2",)),
    PartitionSpec("q4", ("q1",), ("q3", "q2")),
)

TRIPARTITE_PARTITIONS = (
    PartitionSpec("q1", (), ("q2",), ("q3",)),
    PartitionSpec("q1", ("q2",), ("q3",)),
    PartitionSpec("q2", ("q3",), ("q1",)),
)


def tripartite(count=500, base_seed=TRIPARTITE_SEED, labels=("q1", "q2", "q3")):
    """Random states alternating dims 2x2x2 and 2x3x2, ranks cycling 1..4."""
    for k in range(count):
        dims = (2, 2, 2) if k % 2 == 0 else (2, 3, 2)
        yield random_mixed(dims, 1 + k % 4, base_seed + k, labels=labels)


def tripartite_instances(count=500, base_seed=TRIPARTITE_SEED):
    """``(state, partition)`` pairs cycling through ``TRIPARTITE_PARTITIONS``."""
    for k, state in enumerate(tripartite(count, base_seed)):
        yield state, TRIPARTITE_PARTITIONS[k % len(TRIPARTITE_PARTITIONS)]


def fourpartite(count=200, base_seed=FOURPARTITE_SEED):
    """Random 2x2x2x2 states, ranks cycling 1..4 (rank 1 is pure)."""
    for k in range(count):
        yield random_mixed((2, 2, 2, 2), 1 + k % 4, base_seed + k)


def fourpartite_instances(count=200, base_seed=FOURPARTITE_SEED):
    """``(state, partition)`` pairs cycling through ``FOURPARTITE_PARTITIONS``."""
    for k, state in enumerate(fourpartite(count, base_seed)):
        yield state, FOURPARTITE_PARTITIONS[k % len(FOURPARTITE_PARTITIONS)]


def named_instances():
    """GHZ3, GHZ4, W3 and the Werner family with fixed partitions."""
    out = [
        ("ghz3", ghz(3), PartitionSpec("q1", (), ("q2",), ("q3",))),
        ("ghz4", ghz(4), PartitionSpec("q1", ("q2",), ("q3",), ("q4",))),
        ("ghz4-bob2", ghz(4), PartitionSpec("q1", (), ("q2", "q3"), ("q4",))),
        ("w3", w(3), PartitionSpec("q1", ("q2",), ("q3",))),
        ("bell", bell(), PartitionSpec("A", (), (), ("B",))),
    ]
    for p in (0.0, 0.25, 0.5, 0.75, 1.0):
        st = relabel(werner(p), roles=("transfer", "bob_qsi"))
        out.append((f"werner({p})", st, PartitionSpec("A", (), ("B",))))
    return out
