"""Effects of side information on the optimal costs.

``E[O]_{i,j} = O_{0,0} - O_{i,j}`` for O in {Q, E, c, e}. Every report carries
the value obtained from two cost evaluations and the closed form built from
mutual informations, so the two routes can be compared.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .checks import DEFAULT_TOL, IdentityCheck
from .costs import check_usage, cost_cell
from .entropy import qcmi, qmi
from .hilbert import as_labels

RESOURCE_TYPES = ("Q", "E", "c", "e")

# closed-form coefficients of I(C_A; Alice's QSI) and I(C_A; Bob's QSI)
ALICE_COEFF = {"Q": 0.5, "E": -0.5, "c": 1.0, "e": 0.0}
BOB_COEFF = {"Q": 0.5, "E": 0.5, "c": 1.0, "e": 1.0}


def _check_type(resource_type):
    if resource_type not in RESOURCE_TYPES:
        raise ValueError(f"resource type must be one of {RESOURCE_TYPES}, got {resource_type!r}")


@dataclass(frozen=True)
class EffectReport:
    resource_type: str
    start: Tuple[int, int]
    end: Tuple[int, int]
    by_definition: float
    closed_form: float
    alice_part: float
    bob_part: float
    closed_alice: float
    closed_bob: float

    @property
    def closed_form_residual(self):
        return abs(self.by_definition - self.closed_form)

    @property
    def decomposition_residual(self):
        return abs(self.by_definition - (self.alice_part + self.bob_part))

    def consistent(self, tol=DEFAULT_TOL):
        return self.closed_form_residual <= tol and self.decomposition_residual <= tol


class EffectTable:
    """Effects for one (state, partition) with memoized cost cells and increments.

    The module-level functions build a fresh table per call; hold on to one
    when evaluating many usages of the same instance.
    """

    def __init__(self, state, partition):
        partition.validate_against(state)
        self.state = state
        self.partition = partition
        self._cells = {}
        self._inc = {}

    def cell(self, i, j):
        if (i, j) not in self._cells:
            self._cells[i, j] = cost_cell(self.state, self.partition, (i, j))
        return self._cells[i, j]

    def _effect(self, o, i, j):
        return self.cell(0, 0).value(o) - self.cell(i, j).value(o)

    def _increment(self, side, k1, k2):
        """I(C_A; S_{k1+1}..S_{k2} | S_1..S_{k1}) for S = A or B; 0 if nothing is added."""
        if k1 == k2:
            return 0.0
        key = (side, k1, k2)
        if key not in self._inc:
            p = self.partition
            qsi = p.alice_qsi if side == "A" else p.bob_qsi
            self._inc[key] = qcmi(self.state, p.transfer, qsi[k1:k2], qsi[:k1])
        return self._inc[key]

    def _span(self, start, end):
        i1, j1 = check_usage(self.partition, start)
        i2, j2 = check_usage(self.partition, end)
        if i1 > i2 or j1 > j2:
            raise ValueError(f"additional effect needs start <= end componentwise, got {start} -> {end}")
        return (i1, j1), (i2, j2)

    def _report(self, o, start, end):
        (i1, j1), (i2, j2) = start, end
        by_def = self._effect(o, i2, j2) - self._effect(o, i1, j1)
        alice = self._effect(o, i2, 0) - self._effect(o, i1, 0)
        bob = self._effect(o, 0, j2) - self._effect(o, 0, j1)
        ca = ALICE_COEFF[o] * self._increment("A", i1, i2)
        cb = BOB_COEFF[o] * self._increment("B", j1, j2)
        return EffectReport(o, start, end, by_def, ca + cb, alice, bob, ca, cb)

    def effect(self, resource_type, usage) -> EffectReport:
        _check_type(resource_type)
        return self._report(resource_type, (0, 0), check_usage(self.partition, usage))

    def additional(self, resource_type, start, end) -> EffectReport:
        _check_type(resource_type)
        return self._report(resource_type, *self._span(start, end))

    def _identities(self, start, end, tol, alice_sym, bob_sym):
        reps = {o: self._report(o, start, end) for o in RESOURCE_TYPES}
        inc_a = self._increment("A", start[0], end[0])
        inc_b = self._increment("B", start[1], end[1])

        def a(o):
            return reps[o].alice_part

        def b(o):
            return reps[o].bob_part

        return [
            IdentityCheck(f"{alice_sym}[e] = 0", a("e"), 0.0, tol),
            IdentityCheck(f"{alice_sym}[c] = I_A", a("c"), inc_a, tol),
            IdentityCheck(f"2{alice_sym}[Q] = I_A", 2 * a("Q"), inc_a, tol),
            IdentityCheck(f"-2{alice_sym}[E] = I_A", -2 * a("E"), inc_a, tol),
            IdentityCheck(f"{bob_sym}[c] = I_B", b("c"), inc_b, tol),
            IdentityCheck(f"{bob_sym}[e] = I_B", b("e"), inc_b, tol),
            IdentityCheck(f"2{bob_sym}[Q] = I_B", 2 * b("Q"), inc_b, tol),
            IdentityCheck(f"2{bob_sym}[E] = I_B", 2 * b("E"), inc_b, tol),
        ]

    def base_checks(self, i, j, tol=DEFAULT_TOL) -> List[IdentityCheck]:
        i, j = check_usage(self.partition, (i, j))
        return self._identities((0, 0), (i, j), tol, f"A_{i}", f"B_{j}")

    def increment_checks(self, start, end, tol=DEFAULT_TOL) -> List[IdentityCheck]:
        (i1, j1), (i2, j2) = self._span(start, end)
        return self._identities((i1, j1), (i2, j2), tol, f"A_{i1}^{i2}", f"B_{j1}^{j2}")


def effect(state, partition, resource_type, usage) -> EffectReport:
    """E[O]_{i,j} with its Alice/Bob split A[O]_i = E[O]_{i,0}, B[O]_j = E[O]_{0,j}."""
    return EffectTable(state, partition).effect(resource_type, usage)


def additional_effect(state, partition, resource_type, start, end) -> EffectReport:
    """Additional effect E[O]_{i2,j2} - E[O]_{i1,j1} of enlarging the used QSI."""
    return EffectTable(state, partition).additional(resource_type, start, end)


def theorem1_check(state, partition, i, j, tol=DEFAULT_TOL) -> List[IdentityCheck]:
    """Closed forms of A[O]_i and B[O]_j; I_A = I(C_A;A_1..A_i), I_B = I(C_A;B_1..B_j)."""
    return EffectTable(state, partition).base_checks(i, j, tol)


def theorem2_check(state, partition, start, end, tol=DEFAULT_TOL) -> List[IdentityCheck]:
    """Closed forms of the additional effects, with I_A, I_B the conditional informations."""
    return EffectTable(state, partition).increment_checks(start, end, tol)


@dataclass(frozen=True)
class ChainRuleAudit:
    total: float
    telescoped: float
    split: int
    split_sum: float
    terms: Tuple[float, ...]

    @property
    def residual(self):
        vals = (self.total, self.telescoped, self.split_sum)
        return max(vals) - min(vals)

    def agrees(self, tol=DEFAULT_TOL):
        return self.residual <= tol


def chain_rule_audit(state, target, chain: Sequence, split: int) -> ChainRuleAudit:
    """Both sides of the chain rule for I(C; S_1..S_n), plus the two-term split at ``split``."""
    target = as_labels(target)
    groups = [as_labels(g) for g in chain]
    if not target or not groups or any(not g for g in groups):
        raise ValueError("chain rule needs a non-empty target and non-empty chain groups")
    flat = [lab for g in groups for lab in g]
    if len(set(flat) | set(target)) != len(flat) + len(target):
        raise ValueError("target and chain groups must be pairwise disjoint")
    n = len(groups)
    if not 1 <= split <= n:
        raise ValueError(f"split must lie in [1, {n}], got {split}")

    def joined(k0, k1):
        return tuple(lab for g in groups[k0:k1] for lab in g)

    total = qmi(state, target, joined(0, n))
    terms = [qmi(state, target, groups[0])]
    terms += [qcmi(state, target, groups[k], joined(0, k)) for k in range(1, n)]
    head = qmi(state, target, joined(0, split))
    tail = qcmi(state, target, joined(split, n), joined(0, split)) if split < n else 0.0
    return ChainRuleAudit(total, float(sum(terms)), split, head + tail, tuple(terms))
