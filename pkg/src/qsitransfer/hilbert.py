"""Multipartite states: layouts, partial trace, permutation, purification.

Index convention: the first subsystem of a layout is the most significant
tensor index, the same order :func:`qsitransfer.linalg.tensor` uses.
"""
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from .linalg import (
    HERMITIAN_TOL,
    default_cutoff,
    eig_hermitian,
    hermitian_deviation,
    tensor,
)

ROLES = ("transfer", "alice_qsi", "bob_qsi", "reference")
TRACE_TOL = 1e-10
PSD_TOL = 1e-9
NORM_TOL = 1e-10


def as_labels(labels) -> Tuple[str, ...]:
    """Normalize a label or an iterable of labels to a tuple."""
    if isinstance(labels, str):
        return (labels,)
    return tuple(labels)


@dataclass(frozen=True)
class Subsystem:
    label: str
    dim: int
    role: str = "reference"

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise ValueError(f"subsystem label must be a non-empty string, got {self.label!r}")
        if int(self.dim) != self.dim or self.dim < 1:
            raise ValueError(f"subsystem {self.label!r}: dim must be a positive integer")
        if self.role not in ROLES:
            raise ValueError(f"subsystem {self.label!r}: unknown role {self.role!r}")


@dataclass(frozen=True)
class Layout:
    """Ordered subsystems. At most one may carry the ``transfer`` role."""

    subsystems: Tuple[Subsystem, ...]

    def __post_init__(self):
        object.__setattr__(self, "subsystems", tuple(self.subsystems))
        labels = self.labels
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate subsystem labels in {labels}")
        n_transfer = sum(s.role == "transfer" for s in self.subsystems)
        if n_transfer > 1:
            raise ValueError(f"layout has {n_transfer} transfer subsystems, at most one allowed")

    @classmethod
    def of(cls, spec: Iterable) -> "Layout":
        """Build from ``Subsystem`` objects or ``(label, dim[, role])`` tuples."""
        return cls(tuple(s if isinstance(s, Subsystem) else Subsystem(*s) for s in spec))

    @property
    def labels(self):
        return tuple(s.label for s in self.subsystems)

    @property
    def dims(self):
        return tuple(s.dim for s in self.subsystems)

    @property
    def total_dim(self):
        return int(np.prod(self.dims, dtype=np.int64)) if self.subsystems else 1

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown subsystem label {label!r}; layout has {self.labels}") from None

    def subset(self, labels) -> "Layout":
        wanted = set(as_labels(labels))
        for lab in wanted:
            self.index(lab)
        return Layout(tuple(s for s in self.subsystems if s.label in wanted))

    def with_roles(self, roles) -> "Layout":
        """Copy with roles replaced from a ``{label: role}`` mapping."""
        for lab in roles:
            self.index(lab)
        return Layout(
            tuple(Subsystem(s.label, s.dim, roles.get(s.label, s.role)) for s in self.subsystems)
        )

    def __add__(self, other: "Layout") -> "Layout":
        return Layout(self.subsystems + other.subsystems)


def _frozen(a):
    a = np.array(a, dtype=np.complex128)
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class MultipartiteState:
    """Density operator together with its subsystem layout."""

    layout: Layout
    rho: np.ndarray

    def __post_init__(self):
        rho = _frozen(self.rho)
        object.__setattr__(self, "rho", rho)
        d = self.layout.total_dim
        if rho.shape != (d, d):
            raise ValueError(f"density matrix shape {rho.shape} does not match layout dimension {d}")
        if not np.all(np.isfinite(rho)):
            raise ValueError("density matrix has non-finite entries")
        dev = hermitian_deviation(rho)
        if dev > HERMITIAN_TOL:
            raise ValueError(f"Hermitian check failed: max |rho - rho^H| = {dev:.3e}")
        tr_dev = abs(np.trace(rho) - 1.0)
        if tr_dev > TRACE_TOL:
            raise ValueError(f"trace check failed: |tr(rho) - 1| = {tr_dev:.3e}")
        lam_min = eig_hermitian(rho).values[0]
        if lam_min < -PSD_TOL:
            raise ValueError(f"positivity check failed: smallest eigenvalue {lam_min:.3e}")

    @classmethod
    def _trusted(cls, layout, rho):
        # skips validation; callers guarantee a valid density matrix
        obj = object.__new__(cls)
        object.__setattr__(obj, "layout", layout)
        object.__setattr__(obj, "rho", _frozen(rho))
        return obj

    @property
    def labels(self):
        return self.layout.labels

    @property
    def dims(self):
        return self.layout.dims

    def purity(self):
        return float(np.real(np.trace(self.rho @ self.rho)))

    def is_pure(self, tol=1e-10):
        return abs(self.purity() - 1.0) <= tol


@dataclass(frozen=True, eq=False)
class PureState:
    layout: Layout
    amplitudes: np.ndarray

    def __post_init__(self):
        psi = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        psi.flags.writeable = False
        object.__setattr__(self, "amplitudes", psi)
        if psi.shape[0] != self.layout.total_dim:
            raise ValueError(
                f"amplitude vector length {psi.shape[0]} does not match layout dimension "
                f"{self.layout.total_dim}"
            )
        dev = abs(np.vdot(psi, psi).real - 1.0)
        if dev > NORM_TOL:
            raise ValueError(f"normalization check failed: | <psi|psi> - 1 | = {dev:.3e}")


def density_from_pure(psi: PureState) -> MultipartiteState:
    v = psi.amplitudes
    return MultipartiteState._trusted(psi.layout, np.outer(v, v.conj()))


def _axes(layout, labels):
    return [layout.index(lab) for lab in labels]


def partial_trace(state: MultipartiteState, keep) -> MultipartiteState:
    """Reduced state on ``keep``, in the original relative order."""
    keep = as_labels(keep)
    if not keep:
        raise ValueError("keep must name at least one subsystem")
    kept = sorted(set(_axes(state.layout, keep)))
    layout = state.layout
    n = len(layout.subsystems)
    if len(kept) == n:
        return state
    traced = [k for k in range(n) if k not in kept]
    dims = layout.dims
    dk = int(np.prod([dims[k] for k in kept]))
    dt = int(np.prod([dims[k] for k in traced]))
    t = state.rho.reshape(dims + dims)
    perm = kept + traced
    t = t.transpose(perm + [n + k for k in perm]).reshape(dk, dt, dk, dt)
    reduced = np.einsum("ajbj->ab", t)
    sub = Layout(tuple(layout.subsystems[k] for k in kept))
    return MultipartiteState._trusted(sub, reduced)


def permute(state: MultipartiteState, new_order: Sequence[str]) -> MultipartiteState:
    new_order = as_labels(new_order)
    if sorted(new_order) != sorted(state.labels):
        raise ValueError(f"{list(new_order)} is not a permutation of {list(state.labels)}")
    perm = _axes(state.layout, new_order)
    n = len(perm)
    d = state.layout.total_dim
    t = state.rho.reshape(state.dims + state.dims)
    rho = t.transpose(perm + [n + k for k in perm]).reshape(d, d)
    return MultipartiteState._trusted(Layout(tuple(state.layout.subsystems[k] for k in perm)), rho)


def purify(state: MultipartiteState, ref_label: str = "purifier") -> PureState:
    """Spectral purification sum_i sqrt(lam_i) |v_i>|i> with a rank-sized reference."""
    if ref_label in state.labels:
        raise ValueError(f"reference label {ref_label!r} already used in layout")
    eig = eig_hermitian(state.rho)
    lam = eig.values
    support = lam > default_cutoff(lam)
    lam = lam[support][::-1]
    vecs = eig.vectors[:, support][:, ::-1]
    lam = lam / lam.sum()
    psi = (vecs * np.sqrt(lam)).reshape(-1)
    ref = Subsystem(ref_label, int(lam.size), "reference")
    return PureState(state.layout + Layout((ref,)), psi)


def _two_party(labels, dim, roles):
    return Layout(tuple(Subsystem(lab, dim, role) for lab, role in zip(labels, roles)))


def _default_roles(n):
    return ("transfer",) + ("reference",) * (n - 1)


def maximally_entangled(k: int, labels=("A", "B"), roles=("transfer", "reference")) -> PureState:
    if k < 1:
        raise ValueError("Schmidt rank k must be >= 1")
    psi = np.zeros(k * k, dtype=np.complex128)
    psi[np.arange(k) * (k + 1)] = 1 / np.sqrt(k)
    return PureState(_two_party(labels, k, roles), psi)


def _qubit_labels(n, labels):
    labels = tuple(labels) if labels is not None else tuple(f"q{k + 1}" for k in range(n))
    if len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    return labels


def bell(labels=("A", "B"), roles=("transfer", "reference")) -> MultipartiteState:
    return density_from_pure(maximally_entangled(2, labels, roles))


def ghz(n: int, labels=None, roles=None) -> MultipartiteState:
    if n < 2:
        raise ValueError("ghz needs n >= 2")
    labels = _qubit_labels(n, labels)
    psi = np.zeros(2**n, dtype=np.complex128)
    psi[0] = psi[-1] = 1 / np.sqrt(2)
    lay = _two_party(labels, 2, roles or _default_roles(n))
    return density_from_pure(PureState(lay, psi))


def w(n: int, labels=None, roles=None) -> MultipartiteState:
    if n < 2:
        raise ValueError("w needs n >= 2")
    labels = _qubit_labels(n, labels)
    psi = np.zeros(2**n, dtype=np.complex128)
    psi[[1 << k for k in range(n)]] = 1 / np.sqrt(n)
    lay = _two_party(labels, 2, roles or _default_roles(n))
    return density_from_pure(PureState(lay, psi))


def werner(p: float, labels=("A", "B"), roles=("transfer", "reference")) -> MultipartiteState:
    """``p |Psi-><Psi-| + (1 - p) I/4`` on two qubits."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"werner parameter p must lie in [0, 1], got {p}")
    singlet = np.array([0, 1, -1, 0], dtype=np.complex128) / np.sqrt(2)
    rho = p * np.outer(singlet, singlet.conj()) + (1 - p) * np.eye(4) / 4
    return MultipartiteState(_two_party(labels, 2, roles), rho)


def _layout_for(dims, labels, roles):
    n = len(dims)
    labels = _qubit_labels(n, labels)
    roles = roles or _default_roles(n)
    return Layout(tuple(Subsystem(lab, int(d), r) for lab, d, r in zip(labels, dims, roles)))


def _haar_vector(dim, rng):
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_pure(dims, seed, labels=None, roles=None) -> MultipartiteState:
    """Haar-random pure state drawn from ``numpy.random.default_rng(seed)``."""
    layout = _layout_for(dims, labels, roles)
    rng = np.random.default_rng(seed)
    return density_from_pure(PureState(layout, _haar_vector(layout.total_dim, rng)))


def random_mixed(dims, rank, seed, labels=None, roles=None) -> MultipartiteState:
    """Marginal of a Haar-random pure state on ``dims`` times a rank-sized environment."""
    if rank < 1:
        raise ValueError("rank must be >= 1")
    layout = _layout_for(dims, labels, roles)
    rng = np.random.default_rng(seed)
    m = _haar_vector(layout.total_dim * rank, rng).reshape(layout.total_dim, rank)
    return MultipartiteState(layout, m @ m.conj().T)


def product(*states: MultipartiteState) -> MultipartiteState:
    layout = states[0].layout
    for s in states[1:]:
        layout = layout + s.layout
    return MultipartiteState._trusted(layout, tensor(*(s.rho for s in states)))


def relabel(state: MultipartiteState, labels=None, roles=None) -> MultipartiteState:
    """Copy with new labels and/or roles, positionally."""
    subs = state.layout.subsystems
    labels = labels or [s.label for s in subs]
    roles = roles or [s.role for s in subs]
    if len(labels) != len(subs) or len(roles) != len(subs):
        raise ValueError("relabel needs one label and role per subsystem")
    lay = Layout(tuple(Subsystem(lab, s.dim, r) for lab, s, r in zip(labels, subs, roles)))
    return MultipartiteState._trusted(lay, state.rho)
