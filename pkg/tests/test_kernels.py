"""The compiled kernels and their pure-Python twins must agree exactly."""
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ulamcodes import _accel, _pykernels

try:
    from ulamcodes import _kernels
except ImportError:  # extension not built
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
seqs = st.lists(st.integers(1, 4), min_size=0, max_size=12)


@st.composite
def books(draw):
    n = draw(st.integers(1, 8))
    rows = draw(st.integers(1, 6))
    book = draw(st.lists(st.lists(st.integers(1, 3), min_size=n, max_size=n),
                         min_size=rows, max_size=rows))
    word = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    return np.array(book, dtype=np.int64), np.array(word, dtype=np.int64)


@needs_ext
@given(seqs, seqs)
def test_lcs_parity(x, y):
    assert _kernels.lcs_length(x, y) == _pykernels.lcs_length(x, y)


@needs_ext
@given(books(), st.integers(0, 9))
def test_search_parity(bw, d):
    book, word = bw
    assert _kernels.far_from_all(word, book, d) == _pykernels.far_from_all(word, book, d)
    assert _kernels.nearest(word, book) == _pykernels.nearest(word, book)
    assert _kernels.min_pairwise_distance(book) == _pykernels.min_pairwise_distance(book)


def test_empty_book_behaviour():
    empty = np.empty((0, 3), dtype=np.int64)
    for mod in filter(None, (_kernels, _pykernels)):
        assert mod.far_from_all([1, 2, 3], empty, 2)
        with pytest.raises(ValueError):
            mod.nearest([1, 2, 3], empty)
        assert mod.min_pairwise_distance(empty) is None


def test_backend_reported():
    assert _accel.BACKEND in ("cython", "python")
    assert _accel.COMPILED == (_accel.BACKEND == "cython")


def test_env_forces_pure_python():
    env = dict(os.environ, ULAM_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import ulamcodes; print(ulamcodes.BACKEND)"],
        env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_pure_backend_end_to_end():
    code = (
        "from ulamcodes.codesim import greedy_code, simulate_channel;"
        "c = greedy_code(5, 1, 3);"
        "print(len(c), simulate_channel(c, 1, 2000, seed=3).successes)"
    )
    outs = set()
    for flag in ("1", "0"):
        env = dict(os.environ, ULAM_PURE_PYTHON=flag)
        res = subprocess.run([sys.executable, "-c", code], env=env,
                             capture_output=True, text=True, check=True)
        outs.add(res.stdout.strip())
    assert len(outs) == 1
