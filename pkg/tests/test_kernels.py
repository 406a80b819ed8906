import os
import subprocess
import sys
from math import comb

import numpy as np
import pytest

from densitylab import _accel, _kernels
from densitylab.constructions import build_Kst_pattern
from densitylab.counting import M, left_star
from densitylab.oracle import random_colored_host, random_ordered_graph

pytestmark = pytest.mark.skipif(not _accel.HAVE_NUMBA, reason="numba not installed")


def both(fn, *args):
    saved = _accel.USE_NUMBA
    try:
        _accel.USE_NUMBA = True
        a = fn(*args)
        _accel.USE_NUMBA = False
        b = fn(*args)
    finally:
        _accel.USE_NUMBA = saved
    return a, b


def test_edge_slots():
    s = _kernels.edge_slots(4)
    assert s.tolist() == [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
    assert _kernels.edge_slots(1).shape == (0, 2)


def test_combo_chunks_cover_everything():
    rows = np.concatenate(list(_kernels._combo_chunks(9, 4, chunk=17)))
    assert len(rows) == comb(9, 4)
    assert len({tuple(r) for r in rows}) == comb(9, 4)


@pytest.mark.parametrize("seed", range(12))
def test_ordered_pattern_agree(seed):
    G = random_ordered_graph(14, 0.5, seed)
    for F in (M, left_star(2), left_star(3)):
        a, b = both(_kernels.ordered_pattern_count, G.adj, F.required())
        assert a == b


@pytest.mark.parametrize("n,m,k", [(4, 3, 2), (5, 5, 3), (6, 7, 2), (6, 12, 3), (5, 1, 1)])
def test_extremes_agree(n, m, k):
    a, b = both(_kernels.left_star_extremes, n, m, k)
    assert a[0] == b[0] and a[1] == b[1] and a[4] == b[4] == comb(comb(n, 2), m)
    assert np.array_equal(a[2], b[2]) and np.array_equal(a[3], b[3])


@pytest.mark.parametrize("seed", range(8))
def test_colored_agree(seed):
    G = random_colored_host(11, 3, seed)
    for P in (build_Kst_pattern(2, 2), build_Kst_pattern(2, 3)):
        a, b = both(_kernels.colored_copy_count, G.color, P.color, 3)
        assert a == b


def test_pattern_codes_overflow():
    big = np.ones((14, 14), dtype=np.int8) - np.eye(14, dtype=np.int8)
    with pytest.raises(ValueError):
        _kernels.pattern_codes(big, 20)


def test_env_flag_selects_numpy():
    env = dict(os.environ, **{_accel.DISABLE_ENV: "1"})
    out = subprocess.run(
        [sys.executable, "-c", "from densitylab import _accel; print(_accel.USE_NUMBA, _accel.backend_name())"],
        capture_output=True, text=True, env=env, check=True,
    )
    assert out.stdout.split()[0] == "False"
