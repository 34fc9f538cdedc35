"""Petz recovery of S2 from S1 and the fidelity bound 2^(-I(C;S2|S1)/2).

The map implemented is the plain (non-rotated) Petz map

    X -> rho_{S1S2}^{1/2} (rho_{S1}^{-1/2} X rho_{S1}^{-1/2} (x) 1_{S2}) rho_{S1S2}^{1/2}

applied to rho_{CS1}. The bound is known to be attained by some recovery map;
whether the plain Petz map meets it for every state is not claimed here, so
``recovery_report`` only reports it.
"""
from dataclasses import dataclass

import numpy as np

from .entropy import fidelity_matrices, qcmi
from .hilbert import MultipartiteState, as_labels, partial_trace, permute
from .linalg import default_cutoff, eig_hermitian, pinv_sqrt, psd_sqrt

DEFICIENCY_FLAG = 1e-6
BOUND_TOL = 1e-8


def _split(state, c, s1, s2):
    c, s1, s2 = as_labels(c), as_labels(s1), as_labels(s2)
    if not c or not s1 or not s2:
        raise ValueError("c, s1 and s2 must each name at least one subsystem")
    groups = c + s1 + s2
    if len(set(groups)) != len(groups):
        raise ValueError("c, s1 and s2 must be disjoint")
    if set(groups) != set(state.labels):
        missing = sorted(set(state.labels) - set(groups))
        extra = sorted(set(groups) - set(state.labels))
        raise ValueError(
            f"c, s1, s2 must partition the layout (unassigned: {missing}, unknown: {extra}); "
            "trace out other subsystems first"
        )
    return c, s1, s2


def _dim(state, labels):
    return int(np.prod([state.layout.subsystems[state.layout.index(lab)].dim for lab in labels]))


def petz_recover(state: MultipartiteState, c, s1, s2):
    """Apply the Petz map S1 -> S1S2 to rho_{CS1}.

    Returns:
        ``(recovered, trace_deficiency)``: the recovered state in the layout
        order ``c + s1 + s2``, and ``1 - tr`` of the map output before it was
        projected onto its support and renormalized.
    """
    c, s1, s2 = _split(state, c, s1, s2)
    ordered = permute(state, c + s1 + s2)
    dc, d2 = _dim(state, c), _dim(state, s2)
    rho_cs1 = partial_trace(ordered, c + s1).rho
    rho_s1 = partial_trace(ordered, s1).rho
    rho_s1s2 = partial_trace(ordered, s1 + s2).rho

    inv = np.kron(np.eye(dc), pinv_sqrt(rho_s1))
    x = inv @ rho_cs1 @ inv
    y = np.kron(x, np.eye(d2))
    root = np.kron(np.eye(dc), psd_sqrt(rho_s1s2))
    out = root @ y @ root
    out = 0.5 * (out + out.conj().T)

    deficiency = float(1.0 - np.trace(out).real)
    eig = eig_hermitian(out)
    lam = np.where(eig.values > default_cutoff(eig.values), eig.values, 0.0)
    out = (eig.vectors * lam) @ eig.vectors.conj().T
    out = out / lam.sum()
    return MultipartiteState._trusted(ordered.layout, out), deficiency


@dataclass(frozen=True)
class RecoveryReport:
    qcmi: float
    achieved_fidelity: float
    bound: float
    trace_deficiency: float

    @property
    def bound_satisfied(self):
        return self.achieved_fidelity >= self.bound - BOUND_TOL

    @property
    def flagged(self):
        """Large trace loss to the support projection."""
        return self.trace_deficiency > DEFICIENCY_FLAG


def recovery_report(state: MultipartiteState, c, s1, s2) -> RecoveryReport:
    c, s1, s2 = _split(state, c, s1, s2)
    info = qcmi(state, c, s2, s1)
    recovered, deficiency = petz_recover(state, c, s1, s2)
    target = permute(state, c + s1 + s2)
    f = fidelity_matrices(target.rho, recovered.rho)
    return RecoveryReport(info, f, 2.0 ** (-max(info, 0.0) / 2.0), deficiency)


def is_markov(state: MultipartiteState, c, s1, s2, tol=1e-8) -> bool:
    """True iff I(C;S2|S1) <= tol."""
    c, s1, s2 = _split(state, c, s1, s2)
    return qcmi(state, c, s2, s1) <= tol
