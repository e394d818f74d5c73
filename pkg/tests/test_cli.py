import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from earoot import cli

GOLDEN = Path(__file__).parent / "golden"
CMD = {"ears-verify": ["ears", "verify"], "fixpoint": ["fixpoint", "decompose"],
       "qtorus": ["qtorus", "run"], "affinize": ["affinize", "run"]}


def kind_of(name):
    return json.loads((resources.files("earoot") / "scenarios" / name).read_text())["kind"]


def run_cli(args, capsys):
    rc = cli.main(args)
    out = capsys.readouterr()
    return rc, out.out, out.err


@pytest.mark.parametrize("name", cli.bundled_scenarios())
def test_golden(name, capsys):
    rc, out, _ = run_cli(CMD[kind_of(name)] + ["--scenario", name], capsys)
    assert rc == 0
    assert out == (GOLDEN / name).read_text(encoding="utf-8")


def test_deterministic(capsys):
    args = ["fixpoint", "decompose", "--scenario", "example-3.5.json"]
    first = run_cli(args, capsys)[1]
    second = run_cli(args, capsys)[1]
    assert first == second


def test_example_35_isolated(capsys):
    rc, out, _ = run_cli(["fixpoint", "decompose", "--scenario", "example-3.5.json"], capsys)
    rep = json.loads(out)
    assert rc == 0
    isolated = {tuple(c["residue"]) for c in rep["data"]["isotropic_classes"] if c["kind"] == "isolated"}
    assert (1, 1, 0) in isolated


def test_trivial_character(capsys):
    rc, out, _ = run_cli(["fixpoint", "decompose", "--scenario", "trivial-character.json"], capsys)
    rep = json.loads(out)
    assert rc == 0 and rep["data"]["fixed_equals_base"] and rep["data"]["decomposition"]["k"] == 1


def test_example_39_m2_witness(capsys):
    rc, out, _ = run_cli(["qtorus", "run", "--scenario", "example-3.9-m2.json"], capsys)
    t = json.loads(out)["data"]["tameness"]
    assert rc == 0
    assert t["verdict"] == "core ≠ G^sigma ∩ G_c"
    assert t["witness"] is not None


def test_malformed_json(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "fixpoint",\n  "payload": {')
    rc, _, err = run_cli(["fixpoint", "decompose", "--scenario", str(p)], capsys)
    assert rc == 1 and "line 2 column" in err


def test_missing_file(capsys):
    rc, _, err = run_cli(["qtorus", "run", "--scenario", "/nonexistent.json"], capsys)
    assert rc == 1 and "not found" in err


def test_kind_mismatch(capsys):
    rc, _, err = run_cli(["qtorus", "run", "--scenario", "example-3.5.json"], capsys)
    assert rc == 1 and "does not match" in err


def test_invalid_payload(tmp_path, capsys):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"example": "3.9", "l": 2, "m": 2, "tau": [[0], [2]], "e": [1]}))
    rc, _, err = run_cli(["qtorus", "run", "--scenario", str(p)], capsys)
    assert rc == 1 and "invalid scenario" in err


def test_claim_failure_exit_two(tmp_path, capsys):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({
        "presentation": {"type": "A1", "nullity": 3, "S": ["000", "100", "010", "001"]},
        "character": {"order": 2, "alpha": [1], "delta": [0, 0, 1]},
        "expect": {"k": 2}}))
    rc, out, _ = run_cli(["fixpoint", "decompose", "--scenario", str(p)], capsys)
    assert rc == 2 and json.loads(out)["verdicts"]["k"] is False


def test_window_precedence(tmp_path, monkeypatch, capsys):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"presentation": {"type": "A1", "nullity": 1, "S": ["0", "1"]}}))
    args = ["ears", "verify", "--scenario", str(p)]
    assert json.loads(run_cli(args, capsys)[1])["window"] == 3
    monkeypatch.setenv("EAROOT_WINDOW", "2")
    assert json.loads(run_cli(args, capsys)[1])["window"] == 2
    p.write_text(json.dumps({"presentation": {"type": "A1", "nullity": 1, "S": ["0", "1"]}, "window": 1}))
    assert json.loads(run_cli(args, capsys)[1])["window"] == 1
    assert json.loads(run_cli(args + ["--window", "4"], capsys)[1])["window"] == 4


def test_bad_env_window(monkeypatch, capsys):
    monkeypatch.setenv("EAROOT_WINDOW", "abc")
    rc, _, err = run_cli(["ears", "verify", "--scenario", "example-3.5-ears.json"], capsys)
    # the bundled scenario carries its own window, so the variable is not consulted
    assert rc == 0
    rc, _, err = run_cli(["affinize", "run", "--scenario", "aff-sl2-trivial.json"], capsys)
    assert rc == 1 and "EAROOT_WINDOW" in err


def test_text_and_output(tmp_path, capsys):
    out = tmp_path / "r.txt"
    rc, stdout, _ = run_cli(["affinize", "run", "--scenario", "aff-sl2-trivial.json", "--format", "text",
                             "--output", str(out)], capsys)
    assert rc == 0 and stdout == ""
    text = out.read_text()
    assert "overall: pass" in text and "EA1: pass" in text


def test_timing_flag(capsys):
    rep = json.loads(run_cli(["ears", "verify", "--scenario", "example-3.5-ears.json", "--timing"], capsys)[1])
    assert rep["timing_ms"] >= 0


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "earoot.cli", "scenarios", "list"], capture_output=True, text=True)
    assert proc.returncode == 0 and "example-3.5.json" in proc.stdout.split()
