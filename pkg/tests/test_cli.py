import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from sheetcalc import cli, orbits
from test_liealg import mutated


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_report_round_trip(capsys):
    code, rep = run(capsys, "orbits", "D", "4", "--partition", "2,2,2,2")
    assert code == 0
    text = json.dumps(rep, sort_keys=True)
    assert json.loads(text) == rep
    for key in ("command", "inputs", "verdicts", "timing", "seed", "version", "schema"):
        assert key in rep


def test_orbits_listing(capsys):
    _, rep = run(capsys, "orbits", "A", "3")
    assert len(rep["verdicts"]) == 5


def test_very_even_orbit_detail(capsys):
    _, rep = run(capsys, "orbits", "D", "4", "--partition", "2,2,2,2")
    assert [v["witness"]["label"] for v in rep["verdicts"]] == ["I", "II"]


def test_single_orbit_detail(capsys):
    _, rep = run(capsys, "orbits", "D", "5", "--partition", "2,2,2,2,1,1")
    (v,) = rep["verdicts"]
    w = v["witness"]
    assert w["dimension"] == orbits.formula_dimension("D", 5, orbits.Partition([2, 2, 2, 2, 1, 1]))
    assert w["rigid"] is False


def test_central_charge_is_rational_string(capsys):
    _, rep = run(capsys, "central-charge", "A", "3", "2,2", "-2")
    assert rep["verdicts"][0]["witness"]["c"] == "1"
    _, rep = run(capsys, "central-charge", "A", "1", "2", "-1/2")
    assert F(rep["verdicts"][0]["witness"]["c"]) == 1 - 6 * F(1, 4) / F(3, 2)


def test_charvar_command(capsys):
    code, rep = run(capsys, "charvar", "typeA-level-minus1", "--n", "4")
    assert code == 0
    assert sum(1 for v in rep["verdicts"] if v["check_id"].startswith("component/")) == 4


def test_sheets_command(capsys):
    _, rep = run(capsys, "sheets", "A", "3")
    assert len(rep["verdicts"]) == 5
    assert sorted(v["witness"]["rank"] for v in rep["verdicts"]) == [0, 1, 1, 2, 3]


def test_verify_examples(capsys):
    code, rep = run(capsys, "verify", "lemma-l1", "--n", "5")
    assert code == 0
    cert = [v for v in rep["verdicts"] if v["check_id"] == "lemma-l1/n=5"][0]
    assert F(cert["witness"]["constant"]) != 0
    code, rep = run(capsys, "verify", "sing-level", "--case", "v0", "--m", "2")
    assert code == 0 and rep["verdicts"][0]["witness"]["levels"] == ["-2"]


@pytest.mark.parametrize("argv", [["verify", "nope"], ["orbits", "D", "2"], ["orbits", "A", "3", "--partition", "x"],
                                  ["central-charge", "A", "3", "2,2", "k"], ["charvar", "unknown-system"], []])
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == 2


def test_strict_unknown(capsys):
    # restricting to a family the check does not have leaves nothing to decide
    assert run(capsys, "verify", "lem-Dss", "--m", "2")[0] == 0
    assert run(capsys, "verify", "lem-Dss", "--m", "2", "--strict")[0] == 3


def test_bad_natural_level_file(capsys, tmp_path):
    assert cli.main(["verify", "thm-G2", "--natural-levels", str(tmp_path / "missing.json")]) == 2


def test_output_file(capsys, tmp_path):
    out = tmp_path / "rep.json"
    cli.main(["orbits", "A", "2", "-o", str(out)])
    assert json.loads(out.read_text()) == json.loads(capsys.readouterr().out)


def test_verify_all_deterministic(capsys):
    code1, a = run(capsys, "verify", "all", "--max-rank", "3", "--jobs", "1")
    code2, b = run(capsys, "verify", "all", "--max-rank", "3", "--jobs", "2")
    strip = lambda r: [(v["check_id"], v["status"], v["witness"]) for v in r["verdicts"]]
    assert code1 == code2 == 0
    assert strip(a) == strip(b)


@pytest.mark.parametrize("seed", [0, 1])
def test_mutation_smoke(capsys, monkeypatch, seed):
    bad = mutated(orbits.algebra_for("A", 3), seed)
    monkeypatch.setitem(orbits._ALG_CACHE, ("A", 3), bad)
    code, rep = run(capsys, "verify", "all", "--max-rank", "4", "--jobs", "1")
    assert code == 1
    assert any(v["status"] == "fail" for v in rep["verdicts"])


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "sheetcalc.cli", "orbits", "A", "2"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["command"] == "orbits"
