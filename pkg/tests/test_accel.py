import os
import subprocess
import sys

import numpy as np

from qsitransfer import _accel, linalg
from qsitransfer._kernels import jacobi_sweeps_numba, jacobi_sweeps_numpy


def _selected(env_update):
    env = dict(os.environ, **env_update)
    code = "from qsitransfer import linalg; print(linalg._sweeps.__name__)"
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout.strip()


def test_env_flag_selects_numpy_kernel():
    assert _selected({"QSITRANSFER_DISABLE_NUMBA": "1"}) == "jacobi_sweeps_numpy"


def test_default_selection_matches_flag():
    expected = "jacobi_sweeps_numba" if _accel.USE_NUMBA else "jacobi_sweeps_numpy"
    assert linalg._sweeps.__name__ == expected


def test_kernels_agree(rng):
    from conftest import random_hermitian

    a = random_hermitian(12, rng)
    v1 = linalg.eig_hermitian(a, kernel=jacobi_sweeps_numba).values
    v2 = linalg.eig_hermitian(a, kernel=jacobi_sweeps_numpy).values
    assert np.max(np.abs(v1 - v2)) <= 1e-12
