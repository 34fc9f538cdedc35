"""Dense complex linear algebra on numpy arrays.

Matrices are plain ``complex128`` ndarrays. The Hermitian eigensolver is a
cyclic Jacobi iteration (see :mod:`qsitransfer._kernels`); the compiled or
the pure-numpy kernel is picked at import time by :mod:`qsitransfer._accel`.
"""
from typing import Callable, NamedTuple, Optional

import numpy as np

from . import _accel
from ._kernels import jacobi_sweeps_numba, jacobi_sweeps_numpy

HERMITIAN_TOL = 1e-10
CONVERGENCE_TOL = 1e-14
MAX_SWEEPS = 60
RELATIVE_ZERO_CUTOFF = 1e-10

_sweeps = jacobi_sweeps_numba if _accel.USE_NUMBA else jacobi_sweeps_numpy


class HermitianEigen(NamedTuple):
    """Ascending eigenvalues and matching orthonormal eigenvector columns."""

    values: np.ndarray
    vectors: np.ndarray

    def reconstruct(self):
        return (self.vectors * self.values) @ self.vectors.conj().T


def as_matrix(a):
    """Return ``a`` as a finite 2-D complex128 array (copied)."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def _require_square(a):
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"square check failed: shape {a.shape}")


def hermitian_deviation(a):
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def tensor(*factors):
    """Kronecker product; the first factor is the most significant index."""
    out = np.ones((1, 1), dtype=np.complex128)
    for f in factors:
        out = np.kron(out, np.asarray(f, dtype=np.complex128))
    return out


def eig_hermitian(a, kernel=None):
    """Eigendecomposition of a Hermitian matrix.

    Args:
        a: square matrix, Hermitian to within ``HERMITIAN_TOL`` (max-abs of
            ``a - a^H``).
        kernel: optional sweep kernel overriding the import-time choice.

    Returns:
        HermitianEigen with ascending eigenvalues.

    Raises:
        ValueError: on a non-square or non-Hermitian input; the message
            names the check and the measured deviation.
        numpy.linalg.LinAlgError: if Jacobi fails to converge.
    """
    a = np.asarray(a, dtype=np.complex128)
    _require_square(a)
    dev = hermitian_deviation(a)
    if dev > HERMITIAN_TOL:
        raise ValueError(
            f"Hermitian check failed: max |a - a^H| = {dev:.3e} > {HERMITIAN_TOL:g}"
        )
    n = a.shape[0]
    work = np.ascontiguousarray(0.5 * (a + a.conj().T))
    vecs = np.eye(n, dtype=np.complex128)
    if n > 1:
        sweeps = (kernel or _sweeps)(work, vecs, CONVERGENCE_TOL, MAX_SWEEPS)
        if sweeps < 0:
            raise np.linalg.LinAlgError(
                f"Jacobi did not converge in {MAX_SWEEPS} sweeps (n={n})"
            )
    vals = np.diag(work).real.copy()
    order = np.argsort(vals, kind="stable")
    return HermitianEigen(vals[order], vecs[:, order])


def default_cutoff(values):
    scale = float(np.max(np.abs(values))) if len(values) else 0.0
    return RELATIVE_ZERO_CUTOFF * scale


def spectral_fn(a, f: Callable, zero_cutoff: Optional[float] = None):
    """Apply a real function to a Hermitian matrix through its spectrum.

    ``f`` must accept a numpy array. Eigenvalues with ``|lam| <= zero_cutoff``
    go to 0 when ``f`` is singular at 0 (e.g. inverse powers), which gives the
    support-restricted pseudo-function. For functions regular at 0 those
    eigenvalues keep ``f(lam)``, falling back to ``f(0)`` where that is
    undefined (``sqrt`` of round-off negatives).

    ``zero_cutoff`` defaults to ``1e-10`` times the largest ``|lam|``.
    """
    eig = eig_hermitian(a)
    vals = eig.values
    cutoff = default_cutoff(vals) if zero_cutoff is None else zero_cutoff
    small = np.abs(vals) <= cutoff
    out = np.zeros_like(vals)
    with np.errstate(all="ignore"):
        out[~small] = f(vals[~small])
        f0 = np.asarray(f(np.zeros(1)), dtype=float)[0]
        if np.isfinite(f0) and np.any(small):
            fs = np.asarray(f(vals[small]), dtype=float)
            out[small] = np.where(np.isfinite(fs), fs, f0)
    return (eig.vectors * out) @ eig.vectors.conj().T


def psd_sqrt(a, zero_cutoff=None):
    """Square root restricted to the support (eigenvalues above the cutoff)."""
    eig = eig_hermitian(a)
    vals = eig.values
    cutoff = default_cutoff(vals) if zero_cutoff is None else zero_cutoff
    root = np.sqrt(np.where(vals > cutoff, vals, 0.0))
    return (eig.vectors * root) @ eig.vectors.conj().T


def pinv_sqrt(a, zero_cutoff=None):
    return spectral_fn(a, lambda x: x ** -0.5, zero_cutoff)


def trace(a):
    a = np.asarray(a)
    _require_square(a)
    return complex(np.trace(a))


def trace_norm(a):
    """Sum of |eigenvalues|; only defined here for Hermitian input."""
    return float(np.sum(np.abs(eig_hermitian(a).values)))
