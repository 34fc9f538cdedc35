"""Von Neumann entropy, mutual information, conditional mutual information and
root fidelity. All logarithms are base 2.
"""
import numpy as np

from .hilbert import MultipartiteState, as_labels, partial_trace
from .linalg import default_cutoff, eig_hermitian, psd_sqrt

NEGATIVE_CLAMP = 1e-9


def spectrum_entropy(values):
    """-sum lam log2 lam, with 0 log 0 = 0 and round-off negatives clamped."""
    lam = np.asarray(values, dtype=float)
    if np.any(lam < -NEGATIVE_CLAMP):
        raise ValueError(f"spectrum has a negative eigenvalue {lam.min():.3e}")
    lam = lam[lam > 0.0]
    return float(-np.sum(lam * np.log2(lam))) + 0.0


def von_neumann(state: MultipartiteState, subset) -> float:
    """Entropy in bits of the reduced state on ``subset``."""
    subset = as_labels(subset)
    if not subset:
        raise ValueError("entropy subset must be non-empty")
    reduced = partial_trace(state, subset)
    return spectrum_entropy(eig_hermitian(reduced.rho).values)


def _disjoint(**groups):
    seen = {}
    for name, labels in groups.items():
        for lab in labels:
            if lab in seen:
                raise ValueError(f"label {lab!r} appears in both {seen[lab]} and {name}")
            seen[lab] = name


def _entropy_or_zero(state, labels):
    return von_neumann(state, labels) if labels else 0.0


def qmi(state: MultipartiteState, x, y) -> float:
    """I(x;y) = H(x) + H(y) - H(xy)."""
    x, y = as_labels(x), as_labels(y)
    if not x or not y:
        raise ValueError("mutual information needs non-empty x and y")
    _disjoint(x=x, y=y)
    return von_neumann(state, x) + von_neumann(state, y) - von_neumann(state, x + y)


def qcmi(state: MultipartiteState, x, y, z=()) -> float:
    """I(x;y|z) = H(xz) + H(yz) - H(z) - H(xyz); reduces to ``qmi`` for empty z."""
    x, y, z = as_labels(x), as_labels(y), as_labels(z)
    if not x or not y:
        raise ValueError("conditional mutual information needs non-empty x and y")
    _disjoint(x=x, y=y, z=z)
    if not z:
        return qmi(state, x, y)
    return (
        von_neumann(state, x + z)
        + von_neumann(state, y + z)
        - von_neumann(state, z)
        - von_neumann(state, x + y + z)
    )


def fidelity_matrices(rho, sigma) -> float:
    rho = np.asarray(rho, dtype=np.complex128)
    sigma = np.asarray(sigma, dtype=np.complex128)
    if rho.shape != sigma.shape:
        raise ValueError(f"fidelity dimension mismatch: {rho.shape} vs {sigma.shape}")
    s = psd_sqrt(rho)
    inner = s @ sigma @ s
    inner = 0.5 * (inner + inner.conj().T)
    lam = eig_hermitian(inner).values
    lam = np.where(lam > default_cutoff(lam), lam, 0.0)
    return float(np.clip(np.sum(np.sqrt(lam)), 0.0, 1.0))


def fidelity(rho: MultipartiteState, sigma: MultipartiteState) -> float:
    """Root fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), clipped to [0, 1]."""
    if rho.layout.total_dim != sigma.layout.total_dim:
        raise ValueError(
            f"fidelity dimension mismatch: {rho.layout.total_dim} vs {sigma.layout.total_dim}"
        )
    return fidelity_matrices(rho.rho, sigma.rho)
