"""Optimal costs of state redistribution and state merging with side information.

For usage (i, j), with Alice using A_1..A_i and Bob using B_1..B_j:

    Q = H(C) - I(C;A_1..A_i)/2 - I(C;B_1..B_j)/2
    E = I(C;A_1..A_i)/2 - I(C;B_1..B_j)/2
    c = 2 H(C) - I(C;A_1..A_i) - I(C;B_1..B_j)
    e = H(C) - I(C;B_1..B_j)

Empty side-information sets contribute a mutual information of 0.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .entropy import qcmi, qmi, von_neumann
from .hilbert import MultipartiteState, Layout, density_from_pure, purify

QUANTUM = "quantum"
CLASSICAL = "classical"
CHANNEL_KINDS = (QUANTUM, CLASSICAL)
PURIFIER_LABEL = "R~"


@dataclass(frozen=True)
class PartitionSpec:
    """Roles of the layout labels: C_A, A_1..A_m, B_1..B_n and the reference."""

    transfer: str
    alice_qsi: Tuple[str, ...] = ()
    bob_qsi: Tuple[str, ...] = ()
    reference: Tuple[str, ...] = ()

    def __post_init__(self):
        for name in ("alice_qsi", "bob_qsi", "reference"):
            val = getattr(self, name)
            object.__setattr__(self, name, (val,) if isinstance(val, str) else tuple(val))
        labels = self.all_labels
        if len(set(labels)) != len(labels):
            raise ValueError(f"partition labels are not distinct: {labels}")

    @property
    def m(self):
        return len(self.alice_qsi)

    @property
    def n(self):
        return len(self.bob_qsi)

    @property
    def all_labels(self):
        return (self.transfer,) + self.alice_qsi + self.bob_qsi + self.reference

    @classmethod
    def from_layout(cls, layout: Layout) -> "PartitionSpec":
        """Read roles off a layout, keeping layout order for the QSI lists."""
        by_role: Dict[str, List[str]] = {"transfer": [], "alice_qsi": [], "bob_qsi": [], "reference": []}
        for s in layout.subsystems:
            by_role[s.role].append(s.label)
        if len(by_role["transfer"]) != 1:
            raise ValueError(
                f"layout must have exactly one transfer subsystem, found {len(by_role['transfer'])}"
            )
        return cls(
            by_role["transfer"][0],
            tuple(by_role["alice_qsi"]),
            tuple(by_role["bob_qsi"]),
            tuple(by_role["reference"]),
        )

    def validate_against(self, state: MultipartiteState):
        have = set(state.labels)
        mine = set(self.all_labels)
        if mine - have:
            raise ValueError(f"partition names labels missing from the state: {sorted(mine - have)}")
        if have - mine:
            raise ValueError(f"state labels not assigned by the partition: {sorted(have - mine)}")

    def alice_used(self, i):
        return self.alice_qsi[:i]

    def bob_used(self, j):
        return self.bob_qsi[:j]

    def unused(self, i, j):
        """R~ = A_{i+1}..A_m B_{j+1}..B_n R."""
        return self.alice_qsi[i:] + self.bob_qsi[j:] + self.reference


def check_usage(partition: PartitionSpec, usage) -> Tuple[int, int]:
    i, j = (int(u) for u in usage)
    if not 0 <= i <= partition.m:
        raise ValueError(f"alice usage i={i} outside [0, {partition.m}]")
    if not 0 <= j <= partition.n:
        raise ValueError(f"bob usage j={j} outside [0, {partition.n}]")
    return i, j


@dataclass(frozen=True)
class ResourceVector:
    """Channel rate plus ebit rate per copy; a negative ebit rate is a net gain."""

    channel_kind: str
    channel_rate: float
    ebit_rate: float

    def __post_init__(self):
        if self.channel_kind not in CHANNEL_KINDS:
            raise ValueError(f"channel_kind must be one of {CHANNEL_KINDS}")

    def describe(self):
        unit = "qubits" if self.channel_kind == QUANTUM else "bits"
        if self.ebit_rate < 0:
            ebits = f"{-self.ebit_rate:.10g} ebits net gain"
        else:
            ebits = f"{self.ebit_rate:.10g} ebits"
        return f"{self.channel_rate:.10g} {unit} + {ebits}"


def convert_quantum_to_classical(v: ResourceVector) -> ResourceVector:
    """Teleport each qubit: 2 bits and 1 ebit per qubit."""
    if v.channel_kind != QUANTUM:
        raise ValueError(f"expected a quantum resource vector, got {v.channel_kind}")
    return ResourceVector(CLASSICAL, 2 * v.channel_rate, v.ebit_rate + v.channel_rate)


def convert_classical_to_quantum(v: ResourceVector) -> ResourceVector:
    """Coherent-bit accounting: 2 bits become 1 qubit and return 1 ebit."""
    if v.channel_kind != CLASSICAL:
        raise ValueError(f"expected a classical resource vector, got {v.channel_kind}")
    half = v.channel_rate / 2
    return ResourceVector(QUANTUM, half, v.ebit_rate - half)


@dataclass(frozen=True)
class InformationTerms:
    """H(C_A), I(C_A;A_1..A_i) and I(C_A;B_1..B_j) for one usage."""

    h_transfer: float
    i_alice: float
    i_bob: float


def information_terms(state, partition, usage) -> InformationTerms:
    partition.validate_against(state)
    i, j = check_usage(partition, usage)
    c = partition.transfer
    a = partition.alice_used(i)
    b = partition.bob_used(j)
    return InformationTerms(
        von_neumann(state, c),
        qmi(state, c, a) if a else 0.0,
        qmi(state, c, b) if b else 0.0,
    )


def _redistribution(t: InformationTerms) -> ResourceVector:
    return ResourceVector(
        QUANTUM,
        t.h_transfer - 0.5 * t.i_alice - 0.5 * t.i_bob,
        0.5 * t.i_alice - 0.5 * t.i_bob,
    )


def _merging(t: InformationTerms) -> ResourceVector:
    return ResourceVector(
        CLASSICAL,
        2 * t.h_transfer - t.i_alice - t.i_bob,
        t.h_transfer - t.i_bob,
    )


def redistribution_costs(state, partition, usage) -> ResourceVector:
    """Optimal (Q, E) of state redistribution at usage (i, j)."""
    return _redistribution(information_terms(state, partition, usage))


def merging_costs(state, partition, usage) -> ResourceVector:
    """Optimal (c, e) of state merging at usage (i, j)."""
    return _merging(information_terms(state, partition, usage))


def costs_for(state, partition, usage, channel_kind) -> ResourceVector:
    if channel_kind == QUANTUM:
        return redistribution_costs(state, partition, usage)
    if channel_kind == CLASSICAL:
        return merging_costs(state, partition, usage)
    raise ValueError(f"channel kind must be one of {CHANNEL_KINDS}, got {channel_kind!r}")


def purified_instance(state, partition, ref_label=PURIFIER_LABEL):
    """Pure state plus partition, purifying a mixed input into a fresh reference."""
    partition.validate_against(state)
    if state.is_pure():
        return state, partition
    pure = density_from_pure(purify(state, ref_label))
    return pure, PartitionSpec(
        partition.transfer,
        partition.alice_qsi,
        partition.bob_qsi,
        partition.reference + (ref_label,),
    )


def redistribution_qcmi(state, partition, usage) -> float:
    """Q_{i,j} written as I(C_A; R~ | B~)/2 on a purification."""
    pure, part = purified_instance(state, partition)
    i, j = check_usage(part, usage)
    unused = part.unused(i, j)
    if not unused:
        return 0.0
    return 0.5 * qcmi(pure, part.transfer, unused, part.bob_used(j))


@dataclass(frozen=True)
class CostCell:
    i: int
    j: int
    Q: float
    E: float
    c: float
    e: float

    def value(self, resource_type):
        return getattr(self, resource_type)

    def identity_residuals(self):
        """Residuals of c = 2Q and e = Q + E."""
        return {
            "c=2Q": abs(self.c - 2 * self.Q),
            "e=Q+E": abs(self.e - (self.Q + self.E)),
        }


@dataclass(frozen=True)
class CostGrid:
    partition: PartitionSpec
    cells: Tuple[Tuple[CostCell, ...], ...] = field(repr=False)

    def __getitem__(self, ij):
        i, j = ij
        return self.cells[i][j]

    def __iter__(self):
        for row in self.cells:
            yield from row

    @property
    def shape(self):
        return len(self.cells), len(self.cells[0])


def cost_cell(state, partition, usage) -> CostCell:
    i, j = check_usage(partition, usage)
    t = information_terms(state, partition, (i, j))
    q = _redistribution(t)
    m = _merging(t)
    return CostCell(i, j, q.channel_rate, q.ebit_rate, m.channel_rate, m.ebit_rate)


def cost_grid(state, partition) -> CostGrid:
    partition.validate_against(state)
    cells = tuple(
        tuple(cost_cell(state, partition, (i, j)) for j in range(partition.n + 1))
        for i in range(partition.m + 1)
    )
    return CostGrid(partition, cells)
