import dataclasses
import io
import json
import subprocess
import sys

import pytest

from hassecubic.cli import main
from hassecubic.family import claims


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


def fields(text):
    return dict(line.split("\t", 1) for line in text.strip().splitlines())


def test_solvable_at_three():
    code, out = run("solvable", "--u", "1", "--p", "3", "--precision", "8")
    assert code == 0
    f = fields(out)
    assert f["status"] == "Solvable" and f["strategy"] == "residue-search"
    assert f["point"] == "(3121 : 2 : 1)" and f["replay"] == "True"


def test_solvable_second_chart():
    code, out = run("solvable", "--u", "4079/3839", "--p", "11")
    assert code == 0 and fields(out)["chart"] == "second"


def test_jacobian_at_zero():
    code, out = run("jacobian", "--t", "0")
    f = fields(out)
    assert code == 0
    assert (f["A"], f["B"], f["j"]) == ("145800", "-6129675", "21499084800/13459681")


def test_jacobian_at_two():
    f = fields(run("jacobian", "--t", "2")[1])
    assert f["A"] == "37987153531816321800"
    assert f["B"] == "-15980673097171744470014265675"


def test_fiber_at_infinity():
    code, out = run("fiber", "--u", "oo")
    f = fields(out)
    assert code == 0 and f["w^3"] == "12" and f["x^2y"] == "-30"


def test_verify_claim_and_json(tmp_path):
    path = tmp_path / "c1.json"
    code, out = run("verify", "claim", "C1", "--json", str(path))
    assert code == 0
    assert out.splitlines()[0].startswith("C1\tVerified\t")
    assert "1 claim: 1 Verified" in out
    data = json.loads(path.read_text())
    assert [c["id"] for c in data["claims"]] == ["C1"]


def test_verify_failure_exits_one(monkeypatch):
    rec = claims.REGISTRY["C1"]
    monkeypatch.setitem(claims.REGISTRY, "C1", dataclasses.replace(rec, procedure=lambda cfg, deps: (False, {})))
    code, out = run("verify", "claim", "C1")
    assert code == 1 and "C1\tFailed" in out


def test_unknown_verdict_exits_one(monkeypatch):
    rec = claims.REGISTRY["C1"]

    def boom(cfg, deps):
        raise ArithmeticError("boom")

    monkeypatch.setitem(claims.REGISTRY, "C1", dataclasses.replace(rec, procedure=boom))
    assert run("verify", "claim", "C1")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "claim", "C99"],
        ["bogus"],
        ["verify", "all", "--sweep", "50", "10"],
        ["verify", "all", "--precision", "0"],
        ["solvable", "--u", "abc", "--p", "3"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_unknown_claim_message(capsys):
    run("verify", "claim", "C99")
    assert "unknown claim id C99" in capsys.readouterr().err


def test_report_directory(tmp_path):
    code, out = run("verify", "all", "--sweep", "7", "13", "--t-samples", "0,2", "--report", str(tmp_path))
    assert code == 0
    names = {p.name for p in tmp_path.iterdir()}
    assert {"certificate.json", "claims.tsv", "fiber_counts.tsv", "hasse_bound.png", "claim_timings.png", "digest.txt"} <= names
    rows = (tmp_path / "claims.tsv").read_text().splitlines()
    assert rows[0] == "id\tverdict\tmillis\tanchor" and len(rows) == 15
    counts = (tmp_path / "fiber_counts.tsv").read_text().splitlines()
    assert len(counts) == 1 + 7 + 11 + 13 + 359
    for line in counts[1:]:
        p, u, n, a, smooth = map(int, line.split("\t"))
        assert a == p + 1 - n
        if smooth:
            assert a * a <= 4 * p
    assert (tmp_path / "hasse_bound.png").read_bytes()[:4] == b"\x89PNG"
    digest = (tmp_path / "digest.txt").read_text().strip()
    assert digest[:16] in out


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hassecubic", "jacobian", "--t", "oo"], capture_output=True, text=True)
    assert r.returncode == 0 and "A\t" in r.stdout
