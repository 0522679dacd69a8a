"""Command-line interface behavior and exit codes."""

import json

from qcla.cli import cli


def test_sim_reversible(capsys):
    assert cli(["sim", "--design", "out1", "--n", "4", "--a", "5", "--b", "7",
                "--backend", "reversible"]) == 0
    assert capsys.readouterr().out.strip() == "12"


def test_sim_statevector_all_branches(capsys):
    assert cli(["sim", "--design", "in2", "--n", "2", "--a", "3", "--b", "2",
                "--backend", "statevector", "--branches", "all"]) == 0
    out = capsys.readouterr().out
    assert "deterministic, correct (3 + 2 = 5)" in out


def test_cost_check_formulas(capsys):
    code = cli(["cost", "--design", "out1", "--n-from", "8", "--n-to", "8",
                "--check-formulas"])
    assert code == 0
    out = capsys.readouterr().out
    row = out.splitlines()[1].split()
    assert "92" in row and "40" in row


def test_cost_json_format(capsys):
    assert cli(["cost", "--design", "in2", "--n-from", "8", "--n-to", "8",
                "--check-formulas", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert rows[0]["t_count"] == 189 == rows[0]["closed_form_t"]


def test_compare_in_place(capsys):
    assert cli(["compare", "--table", "in", "--n", "64"]) == 0
    out = capsys.readouterr().out
    assert "Thapliyal-in: 60.59" in out
    assert "unreproduced" in out


def test_gen_qasm_file(tmp_path):
    target = tmp_path / "circ.qasm"
    assert cli(["gen", "--design", "out1", "--n", "2", "--level", "cliffordt",
                "--format", "qasm3", "-o", str(target)]) == 0
    assert target.read_text().startswith("OPENQASM 3.0;")


def test_gen_qasm_requires_cliffordt(capsys):
    assert cli(["gen", "--design", "out1", "--n", "2", "--format", "qasm3"]) == 2


def test_gen_json_default_level(capsys):
    assert cli(["gen", "--design", "in1", "--n", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "qcla-ir/1"
    assert data["level"] == "toffoli"


def test_usage_error_exit_2(capsys):
    assert cli(["gen", "--design", "bogus", "--n", "2"]) == 2


def test_verify_writes_report(tmp_path, capsys):
    report = tmp_path / "report.json"
    assert cli(["verify", "-o", str(report)]) == 0
    data = json.loads(report.read_text())
    assert data["passed"] is True
    assert len(data["discrepancies"]) == 5
    out = capsys.readouterr().out
    assert out.count("pass") >= 10
