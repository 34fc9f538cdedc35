"""Time the compiled and pure-numpy Jacobi kernels against LAPACK.

    python benchmarks/bench_eigh.py [--dims 4 8 16 32 64] [--repeat 3]

Both kernels are called directly, so the env flag does not matter here.
"""
import argparse
import time

import numpy as np

from qsitransfer import linalg
from qsitransfer._accel import HAS_NUMBA
from qsitransfer._kernels import jacobi_sweeps_numba, jacobi_sweeps_numpy


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", type=int, nargs="+", default=[4, 8, 16, 32, 64])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    # compile outside the timed region
    linalg.eig_hermitian(np.eye(2), kernel=jacobi_sweeps_numba)

    print(f"numba available: {HAS_NUMBA}")
    print(f"{'dim':>4} {'numba ms':>10} {'numpy ms':>10} {'lapack ms':>10} {'speedup':>8} {'max err':>9}")
    for n in args.dims:
        x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        a = (x + x.conj().T) / 2
        t_nb = best_of(lambda: linalg.eig_hermitian(a, kernel=jacobi_sweeps_numba), args.repeat)
        t_np = best_of(lambda: linalg.eig_hermitian(a, kernel=jacobi_sweeps_numpy), args.repeat)
        t_la = best_of(lambda: np.linalg.eigh(a), args.repeat)
        ref = np.linalg.eigvalsh(a)
        err = max(
            np.max(np.abs(linalg.eig_hermitian(a, kernel=k).values - ref))
            for k in (jacobi_sweeps_numba, jacobi_sweeps_numpy)
        )
        print(
            f"{n:>4} {1e3 * t_nb:>10.3f} {1e3 * t_np:>10.3f} {1e3 * t_la:>10.3f}"
            f" {t_np / t_nb:>7.1f}x {err:>9.1e}"
        )


if __name__ == "__main__":
    main()
