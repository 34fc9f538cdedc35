import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from qsitransfer import hilbert  # noqa: E402
from qsitransfer.costs import PartitionSpec  # noqa: E402


def random_hermitian(n, rng):
    x = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (x + x.conj().T) / 2


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def ghz3():
    return hilbert.ghz(3)


@pytest.fixture
def ghz4():
    return hilbert.ghz(4)


@pytest.fixture
def ghz3_partition():
    return PartitionSpec("q1", (), ("q2",), ("q3",))


@pytest.fixture
def bell_cr():
    return hilbert.bell(("C", "R"))


# acceptance summary: one line per criterion, printed at the end of the run
_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    number, title = mark.args
    _criteria[number] = (title, call.excinfo is None)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")
