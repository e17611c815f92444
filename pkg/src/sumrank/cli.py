"""Command line interface: construct, analyze, verify, search.

Exit codes: 0 success, 1 a verification failed, 2 invalid input (a JSON error
object is written to stderr), 3 an enumeration budget was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .constructions import (
    club,
    complete_twisted,
    default_twisted_params,
    doubly_extended_lrs,
    lift,
    lrs,
    orbital_code,
    simplex,
    singer,
    twisted_system,
    two_fold_lrs,
)
from .errors import SumRankError, TooLarge, ValidationError
from .fqlin import FqSubspace
from .geometry import covers_line, duality_sweep, geometric_msrd, msrd_block_bounds, multi_weight, phi, psi, WeightMap
from .gf import make_field
from .hamming_ext import bonisoli_constraints, ext_formula_check, feasible_profiles
from .polyring import prime_power
from .skew import EvaluationPair, default_pair
from .srcode import (
    SumRankCode,
    constant_rank_profile,
    dual_has_weight_one,
    is_nondegenerate,
    random_code,
    weight_distribution,
)
from .sweep import DEFAULT_BUDGET

FAMILIES = (
    "lrs",
    "doubly_extended_lrs",
    "two_fold_lrs",
    "twisted_lrs",
    "complete_twisted",
    "simplex",
    "orbital",
    "club_lift",
    "random",
)
CHECKS = ("duality", "geometry-msrd", "ext-formula", "bonisoli", "line-cover")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------- construction
def _field_from(desc: dict):
    q = int(desc["q"])
    pe = prime_power(q)
    if pe is None:
        raise ValidationError(f"q = {q} is not a prime power")
    p, e = pe
    if "e" in desc and desc["e"] is not None and int(desc["e"]) != e:
        raise ValidationError(f"q = {q} is not p^{desc['e']}")
    return make_field(p, e, int(desc["m"]), desc.get("modulus"))


def _elem(F, value):
    if isinstance(value, int):
        return F.from_coeffs([value])
    return F.from_coeffs(value)


def _vector(F, value):
    return tuple(_elem(F, x) for x in value)


def _subspace(F, value, k):
    if isinstance(value, dict):
        return FqSubspace.from_json(F, value)
    return FqSubspace(F, k, tuple(_vector(F, v) for v in value))


def _pair(F, desc, t, n, s):
    if desc.get("a", "default") == "default" and desc.get("beta", "default") == "default":
        return default_pair(F, t, n, s)
    d = default_pair(F, t, n, s) if "default" in (desc.get("a", "default"), desc.get("beta", "default")) else None
    a = d.a if desc.get("a", "default") == "default" else tuple(_elem(F, x) for x in desc["a"])
    beta = d.beta if desc.get("beta", "default") == "default" else tuple(_elem(F, x) for x in desc["beta"])
    return EvaluationPair(F, a, beta, s)


def construct(desc: dict) -> SumRankCode:
    """Build a code from a construction descriptor."""
    family = desc.get("family")
    if family not in FAMILIES:
        raise ValidationError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    F = _field_from(desc)
    s = int(desc.get("sigma_power", 1))
    k = desc.get("k")
    if family in ("lrs", "doubly_extended_lrs"):
        t = int(desc.get("t", F.q - 1))
        n = int(desc.get("n", F.m))
        pair = _pair(F, desc, t, n, s)
        if k is None:
            raise ValidationError("k is required")
        if family == "lrs":
            code = lrs(F, int(k), pair)
        else:
            code = doubly_extended_lrs(F, int(k), pair, _elem(F, desc.get("gamma", [1])), _elem(F, desc.get("delta", [1])))
    elif family == "two_fold_lrs":
        H = [_elem(F, h) for h in desc["H"]] if "H" in desc else None
        delta = _elem(F, desc["delta"]) if "delta" in desc else None
        code = two_fold_lrs(F, H, delta)
    elif family in ("twisted_lrs", "complete_twisted"):
        prm = default_twisted_params(F, desc.get("t"))
        a = prm["a"] if desc.get("a", "default") == "default" else [_elem(F, x) for x in desc["a"]]
        gamma = prm["gamma"] if desc.get("beta", "default") == "default" else [_elem(F, x) for x in desc["beta"]]
        eta = prm["eta"] if "eta" not in desc else _elem(F, desc["eta"])
        system = twisted_system(F, a, gamma, eta, s)
        if family == "complete_twisted":
            system = complete_twisted(system)
        code = phi(system)
    elif family in ("simplex", "orbital"):
        k = int(k or 2)
        poly = None if "poly" not in desc else [_elem(F, c) for c in desc["poly"]]
        group = singer(F, k, poly)
        if "U" not in desc:
            raise ValidationError("a basis of U is required (U-basis)")
        U = _subspace(F, desc["U"], k)
        code = simplex(group, U) if family == "simplex" else orbital_code(group, U, int(desc.get("r", 1)))
    elif family == "club_lift":
        code = phi(lift(F, [club(F)]).system)
    else:
        profile = desc.get("profile")
        if not profile or k is None:
            raise ValidationError("random codes need a profile and k")
        rng = np.random.default_rng(int(desc.get("seed", 0)))
        code = random_code(F, profile, int(k), rng)
    code.provenance = {key: desc[key] for key in sorted(desc)}
    return code


# --------------------------------------------------------------- reports
def _header(code: SumRankCode) -> dict:
    return {
        "library_version": __version__,
        "field": code.field.to_json(),
        "k": code.k,
        "N": code.N,
        "profile": list(code.profile.lengths),
    }


def analyze_report(code: SumRankCode, workers: int = 1, budget: int = DEFAULT_BUDGET) -> dict:
    wd = weight_distribution(code, workers=workers, budget=budget)
    Q = code.field.order
    prof = constant_rank_profile(code)
    out = _header(code)
    out.update(
        {
            "min_distance": wd.min_distance,
            "singleton_bound": code.singleton_bound(),
            "msrd": wd.min_distance == code.singleton_bound(),
            "one_weight": next(iter(wd.by_weight)) if len(wd.by_weight) == 1 else None,
            "constant_rank_profile": list(prof) if prof else None,
            "nondegenerate": is_nondegenerate(code),
            "dual_distance_exceeds_1": not dual_has_weight_one(code) if code.k < code.N else None,
            "projective_points": wd.total,
            "weight_distribution": [
                {"weight": w, "projective": c, "codewords": c * (Q - 1)} for w, c in wd.by_weight.items()
            ],
            "rank_profiles": [{"profile": list(p), "projective": c} for p, c in wd.by_profile.items()],
        }
    )
    if code.provenance:
        out["provenance"] = code.provenance
    return out


def verify_report(code: SumRankCode, checks=CHECKS, workers: int = 1, budget: int = DEFAULT_BUDGET) -> dict:
    results = {}
    for name in checks:
        if name not in CHECKS:
            raise ValidationError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
        if name == "duality":
            r = duality_sweep(code, workers, budget)
            results[name] = {
                "passed": r.failures == 0 and r.identity_holds,
                "points": r.points,
                "failures": r.failures,
                "weight_plus_sections_equals_N": r.identity_holds,
            }
        elif name == "geometry-msrd":
            wd = weight_distribution(code, workers=workers, budget=budget)
            alg = wd.min_distance == code.singleton_bound()
            geo = geometric_msrd(psi(code), workers=workers, budget=budget)
            results[name] = {"passed": alg == geo, "msrd_from_distance": alg, "msrd_from_hyperplanes": geo}
        elif name == "ext-formula":
            r = ext_formula_check(code, workers, budget)
            results[name] = {
                "passed": r.mismatches == 0,
                "points": r.points,
                "mismatches": r.mismatches,
                "hamming_weights": [{"weight": w, "projective": c} for w, c in r.hamming_weights.items()],
            }
        elif name == "bonisoli":
            prof = constant_rank_profile(code, workers=workers, budget=budget)
            ls = set(code.profile.lengths)
            if prof is None or len(ls) != 1:
                results[name] = {"passed": True, "applicable": False}
            else:
                n = ls.pop()
                F = code.field
                c = bonisoli_constraints(F.q, F.m, code.k, n, code.t, prof)
                feas = feasible_profiles(F.q, F.m, code.k, n, code.t)
                results[name] = {
                    "passed": c["satisfied"] and tuple(prof) in feas,
                    "applicable": True,
                    "profile": list(prof),
                    "constraints": c,
                    "feasible_profiles": [list(p) for p in feas],
                }
        elif name == "line-cover":
            if code.k != 2:
                results[name] = {"passed": True, "applicable": False}
                continue
            system = psi(code)
            mw = multi_weight(system)
            covers = covers_line(WeightMap(code.field, 2, mw))
            wd = weight_distribution(code, workers=workers, budget=budget)
            ow_msrd = len(wd.by_weight) == 1 and wd.min_distance == code.singleton_bound()
            bounds = msrd_block_bounds(code.profile.lengths, code.field.q, code.field.m)
            results[name] = {
                "passed": (not ow_msrd) or (covers and bounds["admissible"]),
                "applicable": True,
                "covers_line": covers,
                "one_weight_msrd": ow_msrd,
                "block_bounds": bounds,
            }
    out = _header(code)
    out["checks"] = results
    out["passed"] = all(r["passed"] for r in results.values())
    return out


def _profiles(t: int, m: int):
    def rec(left, hi):
        if left == 0:
            yield ()
            return
        for n in range(hi, 0, -1):
            for rest in rec(left - 1, n):
                yield (n,) + rest

    yield from rec(t, m)


def search_report(q: int, m: int, t: int | None = None, workers: int = 1) -> dict:
    """Block shapes of one-weight MSRD codes of dimension 2 with t blocks.

    Every non-increasing profile with entries at most m is tested against the
    necessary conditions; admissible shapes get a witness from the library's
    families when one applies.
    """
    pe = prime_power(q)
    if pe is None:
        raise ValidationError(f"q = {q} is not a prime power")
    p, e = pe
    t = q + 1 if t is None else t
    F = make_field(p, e, m)
    shapes = []
    rejected = msrd_block_bounds([1] * t, q, m)["reasons"][:1] if t % q != 1 % q else []
    if not rejected:
        for prof in _profiles(t, m):
            b = msrd_block_bounds(prof, q, m)
            if not b["checks"]["point_count_identity"]:
                continue
            entry = {"profile": list(prof), "admissible": b["admissible"], "shape": b["shape"], "witness": None}
            code = None
            if b["shape"] == "m^(q-1),1,1":
                code = doubly_extended_lrs(F, 2, default_pair(F, q - 1, m), 1, 1)
                fam = "doubly_extended_lrs"
            elif b["shape"] == "m-1,m-1,2":
                code = two_fold_lrs(F)
                fam = "two_fold_lrs"
            if code is not None:
                wd = weight_distribution(code, workers=workers)
                ok = len(wd.by_weight) == 1 and wd.min_distance == code.singleton_bound()
                entry["witness"] = {"family": fam, "one_weight_msrd": ok, "distance": wd.min_distance}
            shapes.append(entry)
    return {
        "library_version": __version__,
        "range_limited": True,
        "scope": f"k = 2, t = {t}, block lengths 1..m; witnesses only from implemented families",
        "q": q,
        "m": m,
        "t": t,
        "field": F.to_json(),
        "rejected": rejected,
        "shapes": shapes,
    }


# ------------------------------------------------------------------- main
def _load_json_arg(value: str):
    if value.startswith("@"):
        return json.loads(Path(value[1:]).read_text())
    return json.loads(value)


def _load_code(path: str) -> SumRankCode:
    d = json.loads(Path(path).read_text())
    if "family" in d and "G" not in d:
        return construct(d)
    return SumRankCode.from_json(d)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _csv_weights(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["weight", "count"])
    for row in report["weight_distribution"]:
        w.writerow([row["weight"], row["codewords"]])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sumrank", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--out")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    c = sub.add_parser("construct", help="build a code and write it as JSON")
    c.add_argument("--descriptor", help="construction descriptor JSON or @file")
    c.add_argument("--family", choices=FAMILIES)
    c.add_argument("--q", type=int)
    c.add_argument("--e", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--sigma-power", type=int, default=1)
    c.add_argument("--modulus", help="JSON list, low degree first")
    c.add_argument("--profile", help="comma separated block lengths (random family)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--U-basis", dest="U_basis", help="JSON or @file: list of vectors of coefficient lists")
    c.add_argument("--poly", help="JSON list of coefficient lists, low degree first")
    c.add_argument("--out")

    for name, hlp in (("analyze", "weight distribution and distance report"), ("verify", "run exhaustive checks")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("code", help="code JSON or construction descriptor JSON")
        common(p)
        if name == "verify":
            p.add_argument("--checks", default=",".join(CHECKS))

    s = sub.add_parser("search", help="block shapes of one-weight MSRD codes with k = 2")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--t", type=int)
    common(s)
    return ap


def _descriptor_from_args(a) -> dict:
    if a.descriptor:
        return _load_json_arg(a.descriptor)
    if not a.family or a.q is None or a.m is None:
        raise ValidationError("construct needs --descriptor or --family, --q and --m")
    d = {"family": a.family, "q": a.q, "m": a.m, "sigma_power": a.sigma_power}
    for key in ("e", "k", "t", "n"):
        if getattr(a, key) is not None:
            d[key] = getattr(a, key)
    if a.modulus:
        d["modulus"] = json.loads(a.modulus)
    if a.profile:
        d["profile"] = [int(x) for x in a.profile.split(",")]
        d["seed"] = a.seed
    if a.U_basis:
        d["U"] = _load_json_arg(a.U_basis)
    if a.poly:
        d["poly"] = json.loads(a.poly)
    return d


def run(argv=None) -> int:
    a = build_parser().parse_args(argv)
    if a.command == "construct":
        code = construct(_descriptor_from_args(a))
        _emit(dumps(code.to_json()), a.out)
        return 0
    if a.command == "analyze":
        report = analyze_report(_load_code(a.code), a.workers, a.budget)
        _emit(_csv_weights(report) if a.format == "csv" else dumps(report), a.out)
        return 0
    if a.command == "verify":
        checks = [c.strip() for c in a.checks.split(",") if c.strip()]
        report = verify_report(_load_code(a.code), checks, a.workers, a.budget)
        _emit(dumps(report), a.out)
        return 0 if report["passed"] else 1
    report = search_report(a.q, a.m, a.t, a.workers)
    if a.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["profile", "admissible", "shape", "witness_family", "witness_one_weight_msrd"])
        for sh in report["shapes"]:
            wit = sh["witness"] or {}
            w.writerow([" ".join(map(str, sh["profile"])), sh["admissible"], sh["shape"] or "", wit.get("family", ""), wit.get("one_weight_msrd", "")])
        _emit(buf.getvalue(), a.out)
    else:
        _emit(dumps(report), a.out)
    return 0


def main(argv=None) -> None:
    try:
        code = run(argv)
    except TooLarge as exc:
        sys.stderr.write(dumps({"error": "TooLarge", "message": str(exc)}))
        code = 3
    except (SumRankError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(dumps({"error": type(exc).__name__, "message": str(exc)}))
        code = 2
    sys.exit(code)


if __name__ == "__main__":
    main()
