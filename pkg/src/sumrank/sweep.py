"""Range-partitioned sweeps over PG(k-1, q^m).

The point range is cut into fixed chunks that do not depend on the worker
count; chunk results are merged in index order, so output is identical for
any number of workers.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import kernels
from .errors import TooLarge
from .fqlin import num_points, points_array
from .gf import _cached_field

DEFAULT_BUDGET = 1 << 22
CHUNK = 8192


def _hist(arr: np.ndarray) -> dict:
    if len(arr) == 0:
        return {}
    rows, counts = np.unique(arr, axis=0, return_counts=True)
    return {tuple(int(x) for x in r): int(c) for r, c in zip(rows, counts)}


def _task(args):
    kind, fkey, k, M, starts, mode, lo, hi, bname = args
    F = _cached_field(*fkey)
    K = kernels.get(bname)
    tabs = kernels.kernel_tables(F)
    vs = points_array(F, k, lo, hi)
    if kind == "rank":
        return _hist(K.rank_lists(tabs, vs, M, starts))
    if kind == "section":
        return _hist(K.section_dims(tabs, vs, M, starts, mode))
    if kind == "section_array":
        return K.section_dims(tabs, vs, M, starts, mode)
    if kind == "rank_array":
        return K.rank_lists(tabs, vs, M, starts)
    if kind == "duality":
        flags, dims = K.duality_flags(tabs, vs, M, starts)
        bad = np.flatnonzero(flags == 0)
        first = int(lo + bad[0]) if len(bad) else None
        return len(bad), first, dims
    raise ValueError(kind)


def run(kind, F, k, M, starts, mode=0, workers=1, budget=DEFAULT_BUDGET, backend=None):
    """Evaluate one kernel over every point of PG(k-1, q^m).

    Returns a rank/dimension histogram for ``rank``/``section``, the full
    per-point array for the ``*_array`` kinds and ``(failures, first failing
    index, dims array)`` for ``duality``.
    """
    total = num_points(F.order, k)
    if total > budget:
        raise TooLarge(f"{total} projective points exceed the budget of {budget}")
    M = np.ascontiguousarray(M, dtype=np.int64)
    starts = np.ascontiguousarray(starts, dtype=np.int64)
    bname = backend or kernels.BACKEND
    jobs = [(kind, F.key, k, M, starts, mode, lo, min(lo + CHUNK, total), bname) for lo in range(0, total, CHUNK)]
    if workers <= 1 or len(jobs) == 1:
        results = [_task(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_task, jobs))
    if kind in ("rank", "section"):
        acc: Counter = Counter()
        for r in results:
            acc.update(r)
        return dict(sorted(acc.items()))
    if kind.endswith("_array"):
        return np.concatenate(results, axis=0)
    fails = sum(r[0] for r in results)
    firsts = [r[1] for r in results if r[1] is not None]
    dims = np.concatenate([r[2] for r in results], axis=0)
    return fails, (min(firsts) if firsts else None), dims
