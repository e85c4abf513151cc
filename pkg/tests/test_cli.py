import io
import json
import subprocess
import sys

import pytest

from eaqmds.cli import CSV_COLUMNS, main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_field_report():
    code, out = run("field", "--q", "13")
    rep = json.loads(out)
    assert code == 0 and rep["q2_minus_1"] == 168 and rep["factorization_str"] == "2^3 * 3 * 7"
    _, out = run("field", "--q", "29", "--format", "text")
    assert "840 = 2^3 * 3 * 5 * 7" in out


def test_field_even_q():
    assert run("field", "--q", "4")[0] == 1


def test_construct_a_golden():
    code, out = run("construct-a", "--q", "19", "--s", "4", "--t", "6", "--h", "2", "--r", "2", "--d", "12")
    rec = json.loads(out)
    assert code == 0
    assert (rec["n"], rec["kappa"], rec["d"], rec["c_computed"]) == (300, 277, 13, 1)
    assert rec["certificate"]["pattern_found"] == [[8, 8]]
    expected = {
        "q",
        "n",
        "kappa",
        "d",
        "c_computed",
        "c_claimed",
        "construction",
        "inputs",
        "certificate",
        "primitive_element",
        "seed",
    }
    assert expected <= rec.keys()


def test_construct_a_partial_exit():
    code, out = run("construct-a", "--q", "29", "--s", "6", "--t", "7", "--h", "2", "--r", "3", "--d", "18")
    assert code == 2 and json.loads(out)["certificate"]["largest_verified"] == 16


def test_construct_a_hard_violation(capsys):
    code, _ = run("construct-a", "--q", "19", "--s", "3", "--t", "6", "--h", "1", "--r", "2", "--d", "5")
    assert code == 1
    assert "does not divide" in capsys.readouterr().err


def test_construct_a_d_out_of_range():
    assert run("construct-a", "--q", "19", "--s", "4", "--t", "6", "--h", "2", "--r", "2", "--d", "13")[0] == 1


def test_construct_b_modes():
    code, out = run("construct-b", "--q", "13", "--s", "3", "--e", "2", "--case", "odd", "--k", "11", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.split(",") == CSV_COLUMNS
    assert row == "13,121,103,12,4,4,B,pass"
    code, out = run("construct-b", "--q", "13", "--s", "3", "--e", "2", "--k", "11", "--b0-mode", "nonzero")
    rec = json.loads(out)
    assert code == 2 and rec["c_computed"] == 5
    assert any("b0-divergence" in w for w in rec["certificate"]["warnings"])


def test_construct_b_even_short():
    code, out = run("construct-b", "--q", "13", "--s", "7", "--e", "6", "--case", "even-short", "--k", "11")
    rec = json.loads(out)
    assert code == 2 and rec["n"] == 157 and rec["kappa"] == 157 - 22 + rec["c_computed"]


def test_battery_flag():
    code, out = run("construct-b", "--q", "5", "--s", "1", "--e", "0", "--k", "1", "--battery")
    assert code == 0 and json.loads(out)["battery"]["ok"]


def test_audit():
    code, out = run("audit", "--table", "2")
    rep = json.loads(out)
    assert code == 0 and rep["summary"]["rows"] == 4
    code, out = run("audit", "--table", "3", "--row", "3", "--format", "text")
    assert "157-2k" in out
    assert run("audit", "--table", "1")[0] == 1


def test_sweep_contents_and_determinism():
    _, a = run("sweep", "--q", "13", "--max-n", "200", "--seed", "42")
    _, b = run("sweep", "--q", "13", "--max-n", "200", "--seed", "42")
    assert a == b
    recs = [json.loads(line) for line in a.splitlines()]
    sigs = {(r["n"], r["kappa"], r["d"], r["c_computed"]) for r in recs}
    assert (121, 103, 12, 4) in sigs and (128, 114, 9, 2) in sigs


def test_sweep_q5_battery_within_caps():
    _, out = run("sweep", "--q", "5", "--max-n", "30")
    assert all(json.loads(line)["n"] <= 30 for line in out.splitlines())


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "eaqmds", "field", "--q", "9"], capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["p"] == 3


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
