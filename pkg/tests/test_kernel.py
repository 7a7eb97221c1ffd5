from __future__ import annotations

import importlib

import numpy as np
import pytest

from asmlab import kernel
from asmlab._kernel_py import interlacing_rows


@pytest.mark.parametrize("n", range(1, 7))
def test_backends_agree_on_stats(n):
    assert np.array_equal(kernel.stats_histogram(n), kernel.python_stats_histogram(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_first_column_partition(n):
    parts = sum(kernel.stats_histogram(n, c) for c in range(1, n + 1))
    assert np.array_equal(parts, kernel.stats_histogram(n))


@pytest.mark.parametrize("m", range(1, 4))
def test_backends_agree_on_hsasm(m):
    assert np.array_equal(kernel.hsasm_histogram(m), kernel.python_hsasm_histogram(m))


def test_interlacing_rows():
    assert sorted(interlacing_rows((2,), 3)) == [(1, 2), (1, 3), (2, 3)]
    # b1 <= 1 <= b2 <= 3 <= b3, strictly increasing, within 1..4
    rows = list(interlacing_rows((1, 3), 4))
    assert all(r[0] <= 1 <= r[1] <= 3 <= r[2] for r in rows)
    assert sorted(rows) == [(1, 2, 3), (1, 2, 4), (1, 3, 4)]


def test_pure_override(monkeypatch):
    monkeypatch.setenv("ASMLAB_PURE", "1")
    mod = importlib.reload(kernel)
    try:
        assert mod.BACKEND == "python"
        assert mod.stats_histogram(4).sum() == 42
    finally:
        monkeypatch.delenv("ASMLAB_PURE")
        importlib.reload(kernel)


def test_compiled_backend_built():
    assert kernel.BACKEND == "cython"
