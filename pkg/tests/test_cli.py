import json
import subprocess
import sys

import pytest

from torbord.cli import analysis, jsonable, main

E1_TEXT = "4: 1 2 3, 4"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json(capsys):
    code, out, _ = run_cli(capsys, "analyze", E1_TEXT, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["alpha"] == [-1, 1, 0, 1]
    assert list(data)[:5] == ["complex", "f", "alpha", "mu", "h_bier"]


def test_analyze_roundtrip(capsys):
    from torbord.simplicial import from_text

    _, out, _ = run_cli(capsys, "analyze", E1_TEXT, "--json")
    assert json.loads(out) == json.loads(json.dumps(jsonable(analysis(from_text(E1_TEXT)))))


def test_analyze_h(capsys):
    _, out, _ = run_cli(capsys, "analyze", "3:", "--json")
    assert json.loads(out)["h_bier"] == [1, 1, 1]


def test_analyze_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "k.json"
    path.write_text('{"m": 4, "facets": [[1, 2, 3], [4]]}')
    _, out, _ = run_cli(capsys, "analyze", str(path), "--json")
    assert json.loads(out)["mu"] == [1, -3, 3, 0]
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(E1_TEXT))
    _, out, _ = run_cli(capsys, "milnor", "-", "--json")
    assert json.loads(out) == {"milnor": -2}


def test_doubly_ghost_note(capsys):
    _, out, _ = run_cli(capsys, "analyze", "3: 1 2", "--json")
    assert json.loads(out)["notes"]


@pytest.mark.parametrize(
    "argv, code",
    [
        (["analyze", '{"m": 3'], 2),
        (["analyze", "3: 1 2 3"], 2),
        (["analyze", "1: 1"], 2),
        (["analyze", "3: 1 5"], 2),
        (["chern", E1_TEXT, "--partition", "2,2"], 2),
        (["chern", E1_TEXT, "--partition", "a"], 2),
        (["pontryagin", E1_TEXT], 2),
        (["enumerate", "--m", "6", "--find", "generators"], 3),
        (["enumerate", "--m", "8", "--find", "generators", "--sample", "5"], 3),
        (["analyze", "25: 1"], 3),
        (["oracle", "10: 1"], 3),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run_cli(capsys, *argv)[0] == code


def test_oracle_exit_codes(capsys, monkeypatch):
    assert run_cli(capsys, "oracle", E1_TEXT)[0] == 0
    from torbord import charnum

    monkeypatch.setattr(charnum, "milnor_number", lambda K: 0)
    code, out, _ = run_cli(capsys, "oracle", E1_TEXT, "--check", "milnor", "--json")
    assert code == 1 and json.loads(out)["mismatches"]


def test_tables(capsys):
    _, out, _ = run_cli(capsys, "chern", "4: 1 2, 1 3, 1 4, 2 3 4", "--json")
    assert set(json.loads(out)) == {"3", "2,1", "1,1,1"}
    _, out, _ = run_cli(capsys, "chern", E1_TEXT, "--partition", "1,2", "--json")
    assert json.loads(out) == {"2,1": 24}
    _, out, _ = run_cli(capsys, "sw", "5:", "--partition", "4", "--json")
    assert json.loads(out) == {"4": 1}
    _, out, _ = run_cli(capsys, "pontryagin", "5:", "--json")
    assert json.loads(out) == {"2": 10, "1,1": 25}


def test_gamma_and_todd(capsys):
    _, out, _ = run_cli(capsys, "gamma", "--m", "4", "--partition", "1,1,1", "--json")
    row = json.loads(out)["1,1,1"]
    assert row["gamma"] == [64, 56, 48, 48] and row["product_chern"][1] == 54 and row["mod2_agree"]
    _, out, _ = run_cli(capsys, "todd", "--n", "2", "--json")
    assert json.loads(out) == {"2": "1/12", "1,1": "1/12"}


def test_dual_bier_fan(capsys):
    _, out, _ = run_cli(capsys, "dual", "3:")
    assert json.loads(out) == {"m": 3, "facets": [[1, 2], [1, 3], [2, 3]]}
    _, out, _ = run_cli(capsys, "bier", "3:")
    assert json.loads(out)["m"] == 6
    assert run_cli(capsys, "fan", "check", E1_TEXT)[0] == 0


def test_bordism_commands(capsys):
    _, out, _ = run_cli(capsys, "bordism", "compare", "4: 1, 2, 3", E1_TEXT, "--json")
    assert json.loads(out)["bordant"] is True
    _, out, _ = run_cli(capsys, "bordism", "decompose", E1_TEXT, "--json")
    assert json.loads(out)["reduced"] == {"X3": 2, "X1": -1}
    _, out, _ = run_cli(capsys, "bordism", "generator", "4:", "--json")
    assert json.loads(out)["is_generator"] is False
    _, out, _ = run_cli(capsys, "bordism", "null", "5:", "--real", "--json")
    assert json.loads(out) == {"real_null": False}


def test_immersion(capsys):
    _, out, _ = run_cli(capsys, "immersion", "--m", "5", "--sharp", "4", "--json")
    data = json.loads(out)
    assert data["bounds"] == {"p": 3, "k_max": 3, "N_real_min": 7, "N_complex_min": 14}
    assert data["sharp"]["bound"] == 7


def test_enumerate_out(tmp_path, capsys):
    out = tmp_path / "gen.jsonl"
    assert run_cli(capsys, "enumerate", "--m", "3", "--find", "generators", "--out", str(out))[0] == 0
    lines = out.read_text().splitlines()
    assert all(json.loads(l)["kind"] == "generator" for l in lines)


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "torbord.cli", "milnor", E1_TEXT, "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"milnor": -2}
