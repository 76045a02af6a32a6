import io
import json
import subprocess
import sys

import pytest

from mbdom import cli, props, solver
from mbdom.game import GameVariant, Role

C4 = "4\n0 1\n1 2\n2 3\n3 0\n"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def c4_file(tmp_path):
    p = tmp_path / "c4.txt"
    p.write_text(C4)
    return str(p)


def test_solve_c4(capsys, c4_file):
    code, out, _ = run(capsys, "solve", "--input", c4_file, "--game", "mbtd")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["game", "scored", "start", "value", "optimal_first_moves", "nodes", "millis"]
    assert data["value"] == 2 and data["game"] == "mbtd"
    assert data["scored"] == "dominator" and data["start"] == "dominator"


def test_solve_k2_infinity(capsys, monkeypatch):
    code, out, _ = run(capsys, "solve", "--game", "mbtd", "--input", "-", stdin="2\n0 1\n", monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["value"] == "infinity"


def test_solve_line(capsys, c4_file):
    code, out, _ = run(capsys, "solve", "--input", c4_file, "--line")
    line = json.loads(out)["line"]
    assert len(line) == 3 and line[0][0] == "dominator"


def test_construct_solve_pipe():
    gen = subprocess.run([sys.executable, "-m", "mbdom", "construct", "--family", "G2l", "--l", "3"],
                         capture_output=True, text=True, check=True)
    res = subprocess.run([sys.executable, "-m", "mbdom", "solve", "--game", "mbd"], input=gen.stdout,
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    assert json.loads(res.stdout)["value"] == 2


@pytest.mark.parametrize("text,expected", [
    (C4, "D"),
    ("5\n0 1\n1 2\n2 3\n3 4\n4 0\n", "S"),
    ("3\n0 1\n1 2\n0 2\n", "N"),
])
def test_outcome(capsys, monkeypatch, text, expected):
    code, out, _ = run(capsys, "outcome", "--game", "mbtd", stdin=text, monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["outcome"] == expected


def test_construct_gl1(capsys):
    code, out, _ = run(capsys, "construct", "--family", "Gl", "--l", "1")
    assert code == 0
    assert out.endswith("4\n0 1\n0 2\n1 3\n2 3\n")


def test_construct_fkl(capsys):
    code, out, _ = run(capsys, "construct", "--family", "Fkl", "--k", "2", "--l", "2")
    assert code == 0
    body = [ln for ln in out.splitlines() if not ln.startswith("#")]
    assert body[0] == "8"
    assert "# vertices: u=6 v=7" in out


def test_construct_invalid(capsys):
    code, _, err = run(capsys, "construct", "--family", "Gkl", "--k", "2", "--l", "3")
    assert code == 2
    assert "3 <= k <= l" in err and "valid ranges" in err
    code, _, err = run(capsys, "construct")
    assert code == 2


@pytest.mark.parametrize("text", ["3\n0 1\n0 3\n", "abc", "", "2\n0 1\n0 1\n", "2\n\x00\n"])
def test_parse_errors_exit_2(capsys, monkeypatch, text):
    code, out, err = run(capsys, "solve", stdin=text, monkeypatch=monkeypatch)
    assert code == 2 and out == ""
    assert "parse error" in err and "Traceback" not in err


def test_missing_file_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "solve", "--input", str(tmp_path / "missing.txt"))
    assert code == 2 and "cannot read" in err


def test_binary_file_exit_2(capsys, tmp_path):
    p = tmp_path / "bin"
    p.write_bytes(b"\xff\xfe\x00")
    code, _, _ = run(capsys, "solve", "--input", str(p))
    assert code == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["solve", "--game", "chess"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


def test_order_cap_exit_3(capsys, monkeypatch):
    text = "17\n" + "".join(f"{i} {i + 1}\n" for i in range(16))
    code, _, err = run(capsys, "solve", stdin=text, monkeypatch=monkeypatch)
    assert code == 3 and "cap" in err
    code, out, _ = run(capsys, "solve", "--max-n", "17", stdin=text, monkeypatch=monkeypatch)
    # Staller takes the leaf's only neighbour
    assert code == 0 and json.loads(out)["value"] == "infinity"


def _hkl_text():
    return subprocess.run([sys.executable, "-m", "mbdom", "construct", "--family", "Hkl", "--k", "3", "--l", "3"],
                          capture_output=True, text=True, check=True).stdout


def test_budget_exit_3(capsys, monkeypatch):
    text = _hkl_text()
    code, _, err = run(capsys, "solve", "--start", "staller", "--budget-secs", "0.0001", stdin=text,
                       monkeypatch=monkeypatch)
    assert code == 3 and "budget" in err


def test_budget_env_and_flag_precedence(capsys, monkeypatch):
    text = _hkl_text()
    monkeypatch.setenv(cli.BUDGET_ENV, "0.0001")
    code, _, _ = run(capsys, "solve", "--start", "staller", stdin=text, monkeypatch=monkeypatch)
    assert code == 3
    code, out, _ = run(capsys, "solve", "--start", "staller", "--budget-secs", "600", stdin=text,
                       monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["value"] == 3
    monkeypatch.setenv(cli.BUDGET_ENV, "soon")
    code, _, _ = run(capsys, "solve", stdin=C4, monkeypatch=monkeypatch)
    assert code == 2


def test_verify_21(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--theorem", "2.1", "--max-l", "2", "--json", "--out", str(out_file))
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert {i["family"] for i in data["instances"]} == {"Gl", "GlPrime", "GlDoublePrime"}
    assert json.loads(out_file.read_text()) == data
    for inst in data["instances"]:
        assert inst["replay"].startswith("mbdom construct --family ")
        assert all(c["passed"] for c in inst["checks"])


def test_verify_33_human(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "3.3", "--max-k", "3", "--max-l", "3")
    assert code == 0
    assert out.strip().endswith("theorem 3.3: PASS")
    assert out.count("PASS Fkl") == 3


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "9.9")
    assert code == 2 and "unknown theorem" in err


def test_verify_mismatch_exit_1(capsys, monkeypatch):
    real = solver.solve_value

    def broken(g, spec, **kw):
        r = real(g, spec, **kw)
        r.value = r.value + 1
        return r

    monkeypatch.setattr("mbdom.verify.solve_value", broken)
    code, _, err = run(capsys, "verify", "--theorem", "3.3", "--max-k", "2", "--max-l", "2")
    assert code == 1
    assert "mbdom construct --family Fkl --k 2 --l 2" in err
    assert "# family: Fkl" in err


def test_props_small(capsys):
    code, out, _ = run(capsys, "props", "--n-cap", "4", "--samples", "4", "--seed", "1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["pass"] and data["counterexamples"] == []
    assert data["seed"] == 1 and data["graphs"] == 10 + 4
    assert set(data["checks"]) == set(props.PROPERTIES)


def test_props_cap5_exhaustive(capsys):
    code, out, _ = run(capsys, "props", "--n-cap", "5", "--samples", "0", "--json")
    assert code == 0
    data = json.loads(out)
    # connected graphs on 1..5 vertices: 1 + 1 + 2 + 6 + 21
    assert data["graphs"] == 31 and data["pass"]


def test_props_cap_too_big(capsys):
    code, _, _ = run(capsys, "props", "--n-cap", "8")
    assert code == 2


def test_props_mutation_is_caught(capsys, monkeypatch):
    real = solver.solve

    def corrupted(g, variant, scored=Role.DOMINATOR, starter=Role.DOMINATOR, **kw):
        v = real(g, variant, scored, starter, **kw)
        # claim an S-game total domination value one lower than the truth
        if GameVariant(variant) is GameVariant.MBTD and Role(starter) is Role.STALLER and v != solver.INF:
            return v - 1
        return v

    monkeypatch.setattr(props.solver, "solve", corrupted)
    code, out, _ = run(capsys, "props", "--n-cap", "4", "--samples", "0", "--json")
    assert code == 1
    data = json.loads(out)
    assert not data["pass"]
    ce = data["counterexamples"][0]
    assert ce["edge_list"].strip().split("\n")[0].isdigit()
    assert {c["property"] for c in data["counterexamples"]} >= {"chain", "oracle"}
