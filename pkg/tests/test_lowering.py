"""Lowering: gadget gate sequences, T-count arithmetic, structural preservation."""

import pytest

from qcla.builders import Design, build
from qcla.ir import (
    AncillaInit,
    CircuitError,
    GateKind,
    Level,
    QubitRef,
    T_KINDS,
    new_circuit,
    temp_and,
    toffoli,
    uncompute,
)
from qcla.lowering import lower, lower_temporary_and, lower_toffoli, lower_uncompute

Q = [QubitRef("q", i) for i in range(4)]


def _t_count(gates):
    return sum(1 for g in gates if g.kind in T_KINDS)


def test_toffoli_gadget_has_seven_t():
    assert _t_count(lower_toffoli(Q[0], Q[1], Q[2])) == 7


def test_toffoli_gadget_rejects_duplicates():
    with pytest.raises(CircuitError):
        lower_toffoli(Q[0], Q[0], Q[2])


def test_and_gadget_has_four_t():
    gates = lower_temporary_and(Q[0], Q[1], Q[2])
    assert _t_count(gates) == 4
    # inline magic-state preparation comes first
    assert [g.kind for g in gates[:2]] == [GateKind.H, GateKind.T]


def test_uncompute_gadget_zero_t_one_measurement():
    gates = lower_uncompute(Q[0], Q[1], Q[2], cbit=0)
    assert _t_count(gates) == 0
    assert [g.kind for g in gates] == [GateKind.MEASURE_X, GateKind.CC_Z]


def test_lower_mixed_circuit_t_count_11():
    circ = new_circuit([("q", 4, None), ("anc", 2, [AncillaInit.MAGIC_A] * 2)])
    anc = [QubitRef("anc", i) for i in range(2)]
    circ.append(toffoli(Q[0], Q[1], Q[2]))
    circ.append(temp_and(Q[0], Q[1], anc[0]))
    circ.append(uncompute(Q[0], Q[1], anc[0]))
    lowered = lower(circ)
    from qcla.resources import count

    rep = count(lowered)
    assert rep.t_count == 11  # 7 + 4 + 0
    assert rep.measurement_count == 1
    assert lowered.num_cbits == 1


def test_lower_empty_circuit():
    lowered = lower(new_circuit([("q", 1, None)]))
    assert lowered.gates == [] and lowered.level is Level.CLIFFORD_T


def test_lower_preserves_qubits_and_flips_and_target_inits():
    circ = build(Design.OUT_FT_QCLA1, 4)
    lowered = lower(circ)
    assert lowered.num_qubits == circ.num_qubits
    assert [r.name for r in lowered.registers.values()] == [
        r.name for r in circ.registers.values()
    ]
    # every magic ancilla is an AND target, so all become explicit |0> + prep
    for reg in lowered.registers.values():
        if reg.inits is not None:
            assert all(i is AncillaInit.ZERO for i in reg.inits)


def test_lower_requires_toffoli_level():
    with pytest.raises(CircuitError):
        lower(new_circuit([("q", 1, None)], level=Level.CLIFFORD_T))


@pytest.mark.parametrize("design", list(Design))
def test_t_count_additivity(design):
    """T-count of the lowered circuit is exactly 7 per Toffoli + 4 per AND."""
    for n in (1, 3, 6, 13):
        circ = build(design, n)
        toffolis = sum(1 for g in circ.gates if g.kind is GateKind.TOFFOLI)
        ands = sum(1 for g in circ.gates if g.kind is GateKind.TEMP_AND)
        from qcla.resources import count

        assert count(lower(circ)).t_count == 7 * toffolis + 4 * ands


def test_reused_ancillae_get_reset_gates():
    """In-place designs reset re-initialized ancillae with a conditioned X."""
    lowered = lower(build(Design.IN_FT_QCLA1, 8))
    resets = [g for g in lowered.gates if g.kind is GateKind.CC_X]
    assert resets, "expected conditional resets for reused ancillae"
    # a reset must follow the measurement whose bit conditions it
    measured_bits = set()
    for g in lowered.gates:
        if g.kind is GateKind.MEASURE_X:
            measured_bits.add(g.cbit)
        elif g.kind is GateKind.CC_X:
            assert g.cbit in measured_bits


def test_out_of_place_has_no_resets():
    lowered = lower(build(Design.OUT_FT_QCLA1, 8))
    assert not any(g.kind is GateKind.CC_X for g in lowered.gates)
