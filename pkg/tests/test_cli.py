import json
import subprocess
import sys

import pytest

from sumrank.cli import analyze_report, construct, dumps, main, search_report, verify_report


def _main(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    out = capsys.readouterr()
    return exc.value.code, out.out, out.err


def test_construct_analyze_verify(tmp_path, capsys):
    path = tmp_path / "c.json"
    rc, _, _ = _main(["construct", "--family", "doubly_extended_lrs", "--q", "3", "--m", "2", "--k", "2", "--out", str(path)], capsys)
    assert rc == 0
    rc, out, _ = _main(["analyze", str(path)], capsys)
    rep = json.loads(out)
    assert rc == 0 and rep["msrd"] and rep["one_weight"] == 5
    assert rep["library_version"] and rep["field"]["modulus"]
    rc, out, _ = _main(["verify", str(path)], capsys)
    assert rc == 0 and json.loads(out)["passed"]
    rc, out, _ = _main(["analyze", str(path), "--format", "csv"], capsys)
    assert out.splitlines() == ["weight,count", "5,80"]


def test_descriptor(tmp_path, capsys):
    d = {"family": "doubly_extended_lrs", "q": 2, "m": 3, "k": 2, "sigma_power": 1, "a": "default", "beta": "default", "gamma": [1], "delta": [1]}
    p = tmp_path / "d.json"
    p.write_text(json.dumps(d))
    rc, out, _ = _main(["analyze", str(p)], capsys)
    assert rc == 0 and json.loads(out)["min_distance"] == 4
    rc, out, _ = _main(["construct", "--descriptor", "@" + str(p)], capsys)
    assert rc == 0 and json.loads(out)["profile"] == [3, 1, 1]


def test_simplex_with_basis_file(tmp_path, capsys):
    U = tmp_path / "u.json"
    U.write_text(json.dumps([[[0, 1], [1]], [[1, 1], [0]], [[0], [0, 1]]]))
    rc, out, _ = _main(
        ["construct", "--family", "simplex", "--q", "2", "--m", "2", "--k", "2", "--U-basis", "@" + str(U), "--poly", "[[1,1],[1],[1]]"],
        capsys,
    )
    assert rc == 0
    p = tmp_path / "s.json"
    p.write_text(out)
    rc, out, _ = _main(["analyze", str(p)], capsys)
    assert json.loads(out)["one_weight"] == 9


def test_exit_codes(tmp_path, capsys):
    rc, _, err = _main(["construct", "--family", "lrs", "--q", "6", "--m", "2", "--k", "1"], capsys)
    assert rc == 2 and json.loads(err)["error"] == "ValidationError"
    rc, _, err = _main(["analyze", str(tmp_path / "missing.json")], capsys)
    assert rc == 2
    p = tmp_path / "c.json"
    p.write_text(dumps({"family": "lrs", "q": 3, "m": 2, "k": 2, "t": 2, "n": 2}))
    rc, _, err = _main(["analyze", str(p), "--budget", "3"], capsys)
    assert rc == 3 and json.loads(err)["error"] == "TooLarge"


def test_verify_failure_exit_code(monkeypatch, tmp_path, capsys):
    import sumrank.cli as cli

    p = tmp_path / "c.json"
    p.write_text(dumps({"family": "lrs", "q": 3, "m": 2, "k": 1, "t": 2, "n": 2}))

    def broken(*a, **k):
        from sumrank.geometry import DualityReport

        return DualityReport(10, 1, (0, 1), True)

    monkeypatch.setattr(cli, "duality_sweep", broken)
    rc, out, _ = _main(["verify", str(p), "--checks", "duality"], capsys)
    assert rc == 1 and not json.loads(out)["passed"]


def test_search_labels_range():
    r = search_report(2, 3)
    assert r["range_limited"] is True
    shapes = {tuple(s["profile"]): s for s in r["shapes"]}
    assert set(shapes) == {(3, 1, 1), (2, 2, 2)}
    assert all(s["witness"]["one_weight_msrd"] for s in shapes.values())
    assert search_report(2, 3, 4)["rejected"]


def test_reports_deterministic():
    C = construct({"family": "random", "q": 3, "m": 2, "k": 2, "profile": [2, 2, 1], "seed": 4})
    a = dumps(analyze_report(C))
    C2 = construct({"family": "random", "q": 3, "m": 2, "k": 2, "profile": [2, 2, 1], "seed": 4})
    assert a == dumps(analyze_report(C2, workers=2))
    assert dumps(verify_report(C)) == dumps(verify_report(C2, workers=2))


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "sumrank", "search", "--q", "3", "--m", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["shapes"][0]["profile"] == [2, 2, 1, 1]
