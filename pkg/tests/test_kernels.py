"""Backend parity: the compiled kernels and the pure-Python fallback agree."""
import os
import random

import pytest

import oracles
from negn import _kernels, _kernels_py
from negn.partitions import partitions

ck = pytest.importorskip("negn._ckernels", reason="compiled kernels not built")


def test_selected_backend_is_compiled_when_available():
    expected = "python" if os.environ.get("NEGN_PURE_PYTHON") else "cython"
    assert _kernels.BACKEND == expected


def test_hook_and_weyl_parity():
    for area in range(10):
        for p in partitions(area):
            for n in range(max(1, p.num_rows), p.num_rows + 8):
                expected = oracles.weyl_dim(p.rows, n)
                assert ck.hook_content_dim(p.rows, n) == _kernels_py.hook_content_dim(p.rows, n) == expected
                assert ck.weyl_dim(p.rows, n) == _kernels_py.weyl_dim(p.rows, n) == expected


def test_large_inputs_parity():
    rows = (40, 33, 33, 20, 7, 7, 7, 1)
    for n in (8, 50, 300):
        assert ck.hook_content_dim(rows, n) == _kernels_py.hook_content_dim(rows, n)
        assert ck.weyl_dim(rows, n) == _kernels_py.weyl_dim(rows, n)


def test_interpolation_parity():
    rng = random.Random(7)
    for _ in range(200):
        m = rng.randint(1, 14)
        x0 = rng.randint(-30, 30)
        values = [rng.randint(-10**12, 10**12) for _ in range(m)]
        assert ck.interp_consecutive(x0, values) == _kernels_py.interp_consecutive(x0, values)
