"""The compiled and pure-Python sweep kernels must agree exactly."""

import numpy as np
import pytest

from sumrank import kernels, sweep
from sumrank.errors import TooLarge
from sumrank.gf import make_field
from sumrank.geometry import psi, system_matrix
from sumrank.srcode import BlockProfile, random_code

needs_compiled = pytest.mark.skipif("cython" not in kernels.available(), reason="extension not built")

CASES = [
    ((2, 1, 2), (2, 2, 1), 2),
    ((2, 1, 3), (3, 2, 1), 2),
    ((3, 1, 2), (2, 1), 2),
    ((2, 2, 2), (2, 2), 2),
    ((5, 1, 2), (2, 2, 1), 2),
    ((2, 1, 2), (2, 2, 2), 3),
    ((3, 1, 3), (3, 3), 2),
]


def _code(fargs, prof, k, seed):
    F = make_field(*fargs)
    return random_code(F, prof, k, np.random.default_rng(seed))


@needs_compiled
@pytest.mark.parametrize("fargs,prof,k", CASES)
def test_backends_agree(fargs, prof, k):
    for seed in range(3):
        C = _code(fargs, prof, k, seed)
        F = C.field
        S = psi(C)
        B = system_matrix(S)
        bst = BlockProfile(S.dims).starts
        for kind, M, st, mode in [
            ("rank_array", C.G, C.profile.starts, 0),
            ("section_array", B, bst, 0),
            ("section_array", B, bst, 1),
        ]:
            a = sweep.run(kind, F, k, M, st, mode=mode, backend="python")
            b = sweep.run(kind, F, k, M, st, mode=mode, backend="cython")
            assert np.array_equal(a, b), kind
        a = sweep.run("duality", F, k, C.G, C.profile.starts, backend="python")
        b = sweep.run("duality", F, k, C.G, C.profile.starts, backend="cython")
        assert a[0] == b[0] == 0 and a[1] == b[1] and np.array_equal(a[2], b[2])


def test_histograms_independent_of_workers(f9):
    C = _code((3, 1, 2), (2, 2, 1), 2, 0)
    one = sweep.run("rank", C.field, 2, C.G, C.profile.starts, workers=1)
    two = sweep.run("rank", C.field, 2, C.G, C.profile.starts, workers=2)
    assert one == two


def test_budget():
    C = _code((2, 1, 2), (2, 1), 2, 0)
    with pytest.raises(TooLarge):
        sweep.run("rank", C.field, 2, C.G, C.profile.starts, budget=4)


def test_pure_backend_selectable(monkeypatch):
    import importlib

    monkeypatch.setenv("SUMRANK_PURE_PYTHON", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("SUMRANK_PURE_PYTHON")
        importlib.reload(kernels)
