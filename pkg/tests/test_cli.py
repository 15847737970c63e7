import json
import subprocess
import sys
from pathlib import Path

import pytest

from semisep import cli, core
from semisep.core import from_table, monogenic
from semisep.deciders import PreservationReport, classify
from semisep.harness import ScenarioReport

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_text_and_json(capsys):
    code, out, _ = run(capsys, "classify", DATA / "mono_4_1.sgp")
    assert code == 0 and "sss_preserving" in out
    code, out, _ = run(capsys, "classify", DATA / "null2.sgp", "--format", "json")
    assert code == 0
    rep = PreservationReport.from_dict(json.loads(out))
    assert rep == classify(from_table((DATA / "null2.sgp").read_text()))


def test_bad_table_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.sgp"
    bad.write_text("2\n1 0\n0 0\n")
    code, _, err = run(capsys, "classify", bad)
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "classify", tmp_path / "missing.sgp")
    assert code == 2


def test_adian(capsys):
    code, out, _ = run(capsys, "adian", "a b c | ab^2c = b", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d == {"verdict": "embeddable", "left_edges": [["a", "b"]], "right_edges": [["c", "b"]]}
    code, out, _ = run(capsys, "adian", "a | a = a^2")
    assert code == 0 and out.startswith("inconclusive")
    assert run(capsys, "adian", "a | a = b")[0] == 2


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "a b c | ab^2c = b", "a^2b^2c^2")
    assert code == 0 and out.strip() == "abc"
    assert run(capsys, "nf", "a b | ab = ba", "ab")[0] == 2


def test_product_writes_sgp(capsys, tmp_path):
    out_file = tmp_path / "p.sgp"
    code, out, _ = run(capsys, "product", DATA / "trivial.sgp", DATA / "c21.sgp", "--out", out_file)
    assert code == 0
    P = from_table(out_file.read_text())
    assert P.table == from_table((DATA / "c21.sgp").read_text()).table
    assert from_table(out + "\n").table == P.table


def test_product_size_cap(capsys, monkeypatch):
    # shrink the cap so the forced product stays small
    monkeypatch.setattr(core, "MAX_SIZE", 8)
    code, _, err = run(capsys, "product", DATA / "mono_4_1.sgp", DATA / "mono_3_1.sgp")
    assert code == 2 and "cap" in err
    code, out, err = run(capsys, "product", DATA / "mono_4_1.sgp", DATA / "mono_3_1.sgp", "--force", "--format", "json")
    assert code == 0 and "warning" in err
    assert json.loads(out)["size"] == 12


def test_quotient(capsys):
    code, out, _ = run(capsys, "quotient", DATA / "mono_4_1.sgp", "--ideal", "3", "--format", "json")
    assert code == 0 and json.loads(out)["size"] == 4
    code, out, _ = run(capsys, "quotient", DATA / "mono_3_1.sgp", "--congruence", '{"classes": [[0], [1, 2]]}')
    assert code == 0
    assert from_table(out + "\n").table == monogenic(2, 1).table
    assert run(capsys, "quotient", DATA / "leftzero2.sgp", "--ideal", "y")[0] == 2
    assert run(capsys, "quotient", DATA / "leftzero2.sgp")[0] == 2
    assert run(capsys, "quotient", DATA / "mono_3_1.sgp", "--congruence", '{"classes": [[0, 2], [1]]}')[0] == 2


def test_congruences(capsys):
    code, out, _ = run(capsys, "congruences", DATA / "leftzero2.sgp", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["count"] == 2
    assert d["congruences"][0] == {"classes": [[0, 1]]}


def test_separate(capsys):
    code, out, _ = run(capsys, "separate", DATA / "c21.sgp", "--element", "0", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"classes": [[0, 1]], "minimized": True}
    code, out, _ = run(capsys, "separate", DATA / "leftzero2.sgp", "--element", "y", "--from", "z", "--format", "json")
    assert json.loads(out)["classes"] == [[0], [1]]
    assert run(capsys, "separate", DATA / "c21.sgp", "--element", "0", "--from", "0")[0] == 2


def test_golubov(capsys):
    code, out, _ = run(capsys, "golubov", DATA / "c21.sgp", "--a", "0", "--b", "0")
    assert code == 0 and "(1, 1)" in out
    code, out, _ = run(capsys, "golubov", DATA / "c21.sgp", "--a", "0", "--format", "json")
    assert json.loads(out)["distinct_sets"] == 2


def test_verify_single_and_json(capsys):
    code, out, _ = run(capsys, "verify", "eq10", "--maxexp", "5", "--format", "json")
    assert code == 0
    rep = ScenarioReport.from_dict(json.loads(out))
    assert rep.passed and rep.params == {"maxexp": 5}
    code, out, _ = run(capsys, "verify", "lemma-positive", "--maxlen", "2")
    assert code == 0 and out.startswith("lemma-positive: pass (12 checked")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nosuch"],
        ["verify", "embedding", "--maxlen", "99"],
        ["verify", "embedding", "--maxlen", "2", "--force"],
        ["verify", "embedding", "--maxn", "2"],
        ["verify", "all", "--maxlen", "2"],
    ],
)
def test_verify_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_failure_exit_1(capsys, monkeypatch):
    def broken(**params):
        return ScenarioReport("eq10", params, "fail", 1, {"exponent": 2}, 0.0)

    monkeypatch.setitem(cli.SCENARIOS, "eq10", broken)
    monkeypatch.setattr(cli, "run_scenario", lambda name, **b: cli.SCENARIOS[name](**b))
    code, out, _ = run(capsys, "verify", "eq10", "--maxexp", "3")
    assert code == 1 and "counterexample" in out


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "semisep", "nf", "a b c | ab^2c=b", "abbc"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout.strip() == "b"
