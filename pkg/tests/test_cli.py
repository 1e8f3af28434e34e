import json
import subprocess
import sys

import pytest

from tutteratio.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_ratio(capsys):
    code, out = run(capsys, "ratio", "--r", "2", "--n", "3")
    assert code == 0 and out.strip().endswith("6/13")


def test_limit(capsys):
    code, out = run(capsys, "limit", "--r", "4")
    assert code == 0 and "500/19683" in out


def test_eval_quartic(capsys):
    code, out = run(capsys, "eval-quartic", "--x", "27/256")
    assert code == 0 and "5/27" in out


def test_coeff_and_power(capsys):
    assert run(capsys, "coeff", "--n", "5")[1].strip().endswith("399")
    assert run(capsys, "power-coeff", "--r", "3", "--n", "5")[1].strip().endswith("66")


def test_table_rows(capsys):
    code, out = run(capsys, "table", "--max-r", "11")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "B_2: 10/27, 0.3703703704"
    assert lines[6] == "B_8: 625000/10460353203, 0.00005974941647"
    assert run(capsys, "table", "--max-r", "2", "--decimals", "3")[1].strip() == "B_2: 10/27, 0.370"


def test_json_schema_and_determinism(capsys, tmp_path):
    out_file = tmp_path / "o.json"
    code, a = run(capsys, "closed-form", "--r", "2", "--json", "--no-timing", "--out", str(out_file))
    _, b = run(capsys, "closed-form", "--r", "2", "--json", "--no-timing")
    assert code == 0 and a == b == out_file.read_text()
    d = json.loads(a)
    assert set(d) == {"command", "status", "items", "elapsed_ms"}
    assert d["status"] == "value" and d["command"] == "closed-form"
    for it in d["items"]:
        assert set(it) == {"name", "expected", "actual", "pass"}
    assert d["items"][1]["actual"] == "10/27"


def test_pipeline_commands(capsys):
    code, out = run(capsys, "algeq2ode")
    assert code == 0 and "order: 4" in out
    code, out = run(capsys, "ode2rec", "--coeffs=-1;1")
    assert code == 0 and "p_1(n): n + 1" in out
    code, out = run(capsys, "guess-algeq", "--order", "60")
    assert "x^3*y^4" in out
    code, out = run(capsys, "critique")
    assert "1.25375" in out and "exceeds 1" in out


def test_zeilberger_command(capsys):
    code, out = run(capsys, "zeilberger", "--term", "binomial", "--check-to", "30")
    assert code == 0 and "status: pass" in out
    code, out = run(capsys, "zeilberger", "--check-to", "20")
    assert code == 1 and "order: 2" in out
    assert "PASS sum over natural support" in out and "FAIL sum over declared support" in out


def test_argument_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["ratio", "--r", "1", "--n", "3"])
    assert e.value.code == 2
    with pytest.raises(SystemExit):
        main(["eval-quartic", "--x", "abc"])
    with pytest.raises(SystemExit):
        main(["ode2rec", "--P", "x*y+"])
    assert "usage" in capsys.readouterr().err


def test_verify_all_reduced(capsys):
    code, out = run(capsys, "verify-all", "--max-n", "10", "--max-r", "2", "--json", "--no-timing")
    d = json.loads(out)
    names = {i["name"]: i["pass"] for i in d["items"]}
    assert names["[3 fact] limit_B(2)"]
    failing = [n for n, ok in names.items() if not ok]
    # only the declared-support telescoping items are red, see the decisions ledger
    assert failing == [
        "[10 telescoping] operator on sum over 1 <= k <= n-1, 3 <= n <= 10",
        "[10 telescoping] operator on t(n) A_2(n)",
    ]
    assert code == 1 and d["status"] == "fail"


def test_console_script_entry():
    r = subprocess.run([sys.executable, "-m", "tutteratio.cli", "limit", "--r", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "B_2: 10/27"
