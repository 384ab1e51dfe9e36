import json
import subprocess
import sys

import pytest

from nhv.cli import main, main_report


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_alpha_text(capsys):
    code, out, _ = run(["alpha", "--n", "3"], capsys)
    assert code == 0
    assert "alpha_(2,3): x3^2" in out
    assert "d_3(w3): 0" in out


def test_json_output(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(["mul", "--n", "2", "--lhs", "T1", "--rhs", "x1", "--format", "json", "--out", str(target)],
                       capsys)
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["status"] == "info"
    assert data["checks"][0]["lhs"] == "1 + x2*T1"


def test_apply_power(capsys):
    code, out, _ = run(["apply", "--op", "dn", "--n", "1", "--expr", "x1", "--power", "3", "--p", "3"], capsys)
    assert code == 0
    assert "d^3(x1): 0" in out


def test_failing_report_exit_code(capsys):
    code, out, _ = run(["k0", "--p", "3", "--check", "relations"], capsys)
    assert code == 1
    assert out.startswith("k0: fail")


def test_usage_errors(capsys):
    assert run(["relations", "--n", "2", "--p", "9"], capsys)[0] == 2
    assert run(["nilpotency", "--p", "3", "--n", "3"], capsys)[0] == 2
    assert run(["apply", "--op", "dn", "--n", "2", "--expr", "x1 +"], capsys)[0] == 2
    assert run(["apply", "--op", "dn", "--n", "2", "--expr", "x5"], capsys)[0] == 2
    assert run(["apply", "--op", "nope", "--n", "2", "--expr", "x1"], capsys)[0] == 2
    assert run(["bogus"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_degree_bound_env(monkeypatch):
    monkeypatch.setenv("NHV_DEGREE_BOUND", "4")
    r = main_report(["relations", "--n", "2"])
    assert r.params["D"] == 4
    r = main_report(["relations", "--n", "2", "--degree", "6"])
    assert r.params["D"] == 6


def test_pcomplex_blocks(tmp_path, capsys):
    src = tmp_path / "c.json"
    src.write_text(json.dumps({"p": 3, "pieces": [{"q": 0, "dim": 1}, {"q": 2, "dim": 1}],
                               "maps": [{"from": 0, "to": 1, "matrix": [[1]]}]}))
    code, out, _ = run(["pcomplex", "blocks", "--p", "3", "--input", str(src)], capsys)
    assert code == 0
    assert "block q=0 lambda=0 parity=0: size 2" in out
    assert run(["pcomplex", "blocks", "--p", "3"], capsys)[0] == 2


@pytest.mark.parametrize("argv", [
    ["epsilon", "--n", "3"],
    ["nilpotency", "--p", "5", "--n", "2"],
    ["verma", "--p", "5", "--hw", "l^2*q"],
    ["k0", "--p", "5", "--check", "eclass"],
    ["k0", "--p", "3", "--check", "rescaled"],
    ["pcomplex", "shift", "--p", "7", "--weight", "-3"],
    ["filtration", "--n", "2", "--degree", "6", "--algebra", "both"],
    ["conjecture", "--n", "2", "--mmax", "2"],
    ["relations", "--n", "2", "--degree", "6", "--p", "5"],
])
def test_commands_succeed(argv, capsys):
    assert run(argv, capsys)[0] == 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nhv", "alpha", "--n", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "alpha_(1,2): x2^2" in res.stdout
