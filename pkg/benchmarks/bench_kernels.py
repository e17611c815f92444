"""Time the compiled and pure-Python sweep kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--large]

Each row sweeps every projective point once; the two backends must return
identical arrays.
"""

import argparse
import time

import numpy as np

from sumrank import kernels, sweep
from sumrank.constructions import lrs, two_fold_lrs
from sumrank.fqlin import num_points
from sumrank.geometry import psi, system_matrix
from sumrank.gf import make_field
from sumrank.skew import default_pair
from sumrank.srcode import BlockProfile


def workloads(large):
    F27 = make_field(3, 1, 3)
    F16 = make_field(2, 1, 4)
    F32 = make_field(2, 1, 5)
    out = [
        ("LRS q=3 m=3 k=3", lrs(F27, 3, default_pair(F27, 2, 3))),
        ("2-fold q=2 m=4", two_fold_lrs(F16)),
        ("2-fold q=2 m=5", two_fold_lrs(F32)),
        ("LRS q=2 m=4 k=3", lrs(F16, 3, default_pair(F16, 1, 4))),
        ("LRS q=3 m=3 k=4", lrs(F27, 4, default_pair(F27, 2, 3))),
    ]
    if large:
        out.append(("LRS q=3 m=3 k=5", lrs(F27, 5, default_pair(F27, 2, 3))))
    return out


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        res = fn()
        best = min(best, time.perf_counter() - t)
    return best, res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--large", action="store_true", help="add a 550k-point workload (slow on the pure backend)")
    args = ap.parse_args()
    names = sorted(kernels.available())
    if "cython" not in names:
        print("compiled extension not built; only the pure-Python backend is available")
    print(f"{'workload':22s} {'kernel':14s} {'points':>8s} " + " ".join(f"{n:>10s}" for n in names) + "   speedup")
    for label, C in workloads(args.large):
        F = C.field
        S = psi(C)
        jobs = [
            ("rank", C.G, C.profile.starts, 0, "rank_array"),
            ("section", system_matrix(S), BlockProfile(S.dims).starts, 0, "section_array"),
            ("duality", C.G, C.profile.starts, 0, "duality"),
        ]
        for kname, M, st, mode, kind in jobs:
            times = {}
            results = {}
            for b in names:
                times[b], results[b] = timed(lambda: sweep.run(kind, F, C.k, M, st, mode=mode, backend=b), args.repeat)
            vals = list(results.values())
            if kind == "duality":
                same = all(v[0] == vals[0][0] and np.array_equal(v[2], vals[0][2]) for v in vals)
            else:
                same = all(np.array_equal(v, vals[0]) for v in vals)
            assert same, f"backends disagree on {label} / {kname}"
            speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
            row = " ".join(f"{times[n]:10.4f}" for n in names)
            print(f"{label:22s} {kname:14s} {num_points(F.order, C.k):8d} {row} {speed}")


if __name__ == "__main__":
    main()
