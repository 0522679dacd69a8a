"""OpenQASM 3 and JSON IR: emission, parsing, round-trips, golden files."""

from pathlib import Path

import pytest

from qcla.builders import Design, build
from qcla.ir import Circuit, Level, QubitRef, cnot
from qcla.jsonio import JsonIrError, from_json, to_json
from qcla.lowering import lower, lower_uncompute
from qcla.qasm import QasmError, parse_qasm3, to_qasm3

GOLDEN = Path(__file__).resolve().parent.parent / "golden"


def _simple_circuit():
    circ = Circuit(level=Level.CLIFFORD_T)
    circ.add_register("q", 2, None)
    circ.append(cnot(QubitRef("q", 0), QubitRef("q", 1)))
    return circ


def test_single_cnot_emits_one_cx_line():
    text = to_qasm3(_simple_circuit())
    assert sum(1 for ln in text.splitlines() if ln.startswith("cx ")) == 1


def test_uncompute_emits_measure_and_conditional():
    circ = Circuit(level=Level.CLIFFORD_T)
    circ.add_register("q", 3, None)
    q = [QubitRef("q", i) for i in range(3)]
    for g in lower_uncompute(q[0], q[1], q[2]):
        circ.append(g)
    text = to_qasm3(circ)
    assert sum(1 for ln in text.splitlines() if "measure" in ln) == 1
    assert sum(1 for ln in text.splitlines() if ln.startswith("if (")) == 1


def test_qasm_requires_clifford_t_level():
    with pytest.raises(QasmError, match="lower first"):
        to_qasm3(build(Design.OUT_FT_QCLA1, 2))


def test_qasm_round_trip_empty():
    circ = Circuit(level=Level.CLIFFORD_T)
    back = parse_qasm3(to_qasm3(circ))
    assert back.gates == [] and back.num_qubits == 0


def test_qasm_rejects_unknown_gate():
    with pytest.raises(QasmError, match="unsupported"):
        parse_qasm3('OPENQASM 3.0;\ninclude "stdgates.inc";\nqubit[1] q;\nrx(0.5) q[0];\n')


def test_qasm_rejects_missing_header():
    with pytest.raises(QasmError, match="header"):
        parse_qasm3("qubit[1] q;\n")


@pytest.mark.parametrize("design", list(Design))
@pytest.mark.parametrize("n", [1, 2, 4])
def test_qasm_round_trip_lowered_designs(design, n):
    circ = lower(build(design, n))
    text = to_qasm3(circ)
    assert text == to_qasm3(lower(build(design, n)))  # byte-stable
    back = parse_qasm3(text)
    assert back.gates == circ.gates
    assert [(r.name, r.size, r.inits) for r in back.registers.values()] == [
        (r.name, r.size, r.inits) for r in circ.registers.values()
    ]
    assert back.num_cbits == circ.num_cbits


def test_magic_prologue_round_trip():
    """A Clifford+T circuit that still carries a magic ancilla gets a prologue."""
    from qcla.ir import AncillaInit

    circ = Circuit(level=Level.CLIFFORD_T)
    circ.add_register("q", 1, None)
    circ.add_register("anc", 1, [AncillaInit.MAGIC_A])
    circ.append(cnot(QubitRef("anc", 0), QubitRef("q", 0)))
    text = to_qasm3(circ)
    assert "// begin magic-state preparation" in text
    back = parse_qasm3(text)
    assert back.registers["anc"].inits == [AncillaInit.MAGIC_A]
    assert back.gates == circ.gates


@pytest.mark.parametrize("design", list(Design))
@pytest.mark.parametrize("n", [1, 2, 4])
def test_json_round_trip_both_levels(design, n):
    for circ in (build(design, n), lower(build(design, n))):
        text = to_json(circ)
        back = from_json(text)
        assert back.structural_key() == circ.structural_key()
        assert to_json(back) == text


def test_json_rejects_wrong_schema():
    with pytest.raises(JsonIrError):
        from_json('{"schema": "other/9", "level": "toffoli"}')


def test_golden_qasm_files():
    """Exports match the recorded golden bytes for every design at n = 2."""
    for design in Design:
        path = GOLDEN / f"{design.key}_n2.qasm"
        assert path.exists(), f"missing golden file {path}"
        assert to_qasm3(lower(build(design, 2))) == path.read_text()


def test_golden_json_file():
    path = GOLDEN / "out1_n2.json"
    assert to_json(lower(build(Design.OUT_FT_QCLA1, 2))) == path.read_text()
