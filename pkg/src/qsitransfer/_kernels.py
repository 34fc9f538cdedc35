"""Cyclic complex Jacobi sweeps.

Both kernels diagonalize a Hermitian matrix in place and accumulate the
rotations into ``v``. They return the number of sweeps used, or -1 if the
off-diagonal mass did not fall below ``tol`` times the diagonal mass within
``max_sweeps``.

Each rotation acts on the pair (p, q) with the unitary

    U = [[c, s], [-s * conj(w), c * conj(w)]],   w = a[p, q] / |a[p, q]|

which first removes the phase of a[p, q] and then applies the real symmetric
Jacobi rotation (t = tan theta chosen as the smaller root).
"""
import math

import numpy as np

from ._accel import njit


@njit(cache=True)
def _rotation(app, aqq, r):
    tau = (aqq - app) / (2.0 * r)
    if tau >= 0.0:
        t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
    else:
        t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    return t, c, t * c


@njit(cache=True)
def jacobi_sweeps_numba(a, v, tol, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        diag = 0.0
        for i in range(n):
            diag += a[i, i].real ** 2
            for j in range(n):
                if i != j:
                    off += a[i, j].real ** 2 + a[i, j].imag ** 2
        if off <= tol * tol * diag or off == 0.0:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                w = apq / r
                wc = w.conjugate()
                app = a[p, p].real
                aqq = a[q, q].real
                t, c, s = _rotation(app, aqq, r)
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * wc * akq
                    a[k, q] = s * akp + c * wc * akq
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * wc * vkq
                    v[k, q] = s * vkp + c * wc * vkq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * w * aqk
                    a[q, k] = s * apk + c * w * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
    return -1


def jacobi_sweeps_numpy(a, v, tol, max_sweeps):
    n = a.shape[0]
    offmask = ~np.eye(n, dtype=bool)
    for sweep in range(max_sweeps):
        off = float(np.sum(np.abs(a[offmask]) ** 2))
        diag = float(np.sum(np.diag(a).real ** 2))
        if off <= tol * tol * diag or off == 0.0:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                w = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                t, c, s = _rotation_py(app, aqq, r)
                u = np.array([[c, s], [-s * np.conj(w), c * np.conj(w)]])
                cols = [p, q]
                a[:, cols] = a[:, cols] @ u
                v[:, cols] = v[:, cols] @ u
                a[cols, :] = u.conj().T @ a[cols, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = app - t * r
                a[q, q] = aqq + t * r
    return -1


_rotation_py = getattr(_rotation, "py_func", _rotation)
