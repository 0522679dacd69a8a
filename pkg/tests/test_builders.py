"""Builders: round enumeration identities, the classical oracle, circuit shape."""

import random

import pytest

from qcla.builders import Design, RoundKind, build, cla_reference, round_indices
from qcla.ir import GateKind
from qcla.jsonio import to_json
from qcla.resources import floor_log2, hamming_weight


def test_p_rounds_n8():
    assert [(tr.j, tr.k, tr.l) for tr in round_indices(RoundKind.P, 8)] == [
        (2, 4, 3),
        (4, 6, 5),
        (6, 8, 7),
        (4, 8, 6),
    ]


def test_g_rounds_n8():
    assert [(tr.j, tr.k, tr.l) for tr in round_indices(RoundKind.G, 8)] == [
        (0, 2, 1),
        (2, 4, 3),
        (4, 6, 5),
        (6, 8, 7),
        (0, 4, 2),
        (4, 8, 6),
        (0, 8, 4),
    ]


def test_c_rounds_n8():
    assert [(tr.l, tr.k) for tr in round_indices(RoundKind.C, 8)] == [
        (4, 6),
        (2, 3),
        (4, 5),
        (6, 7),
    ]


def test_p_rounds_empty_for_n2():
    assert round_indices(RoundKind.P, 2) == []


@pytest.mark.parametrize("n", range(1, 65))
def test_round_counts_match_stage_formulas(n):
    w, lg = hamming_weight(n), floor_log2(n)
    assert len(round_indices(RoundKind.P, n)) == max(n - w - lg, 0)
    assert len(round_indices(RoundKind.G, n)) == max(n - w, 0)
    assert len(round_indices(RoundKind.C, n)) == max(n - lg - 1, 0)
    if n >= 2:
        w1, lg1 = hamming_weight(n - 1), floor_log2(n - 1)
        assert len(round_indices(RoundKind.REVERSE_P_ERASE, n)) == max(n - 1 - w1 - lg1, 0)
        assert len(round_indices(RoundKind.REVERSE_C, n)) == max(n - lg1 - 2, 0)
        assert len(round_indices(RoundKind.REVERSE_G, n)) == max(n - 1 - w1, 0)


@pytest.mark.parametrize("n", range(2, 40))
def test_erase_rounds_cover_compute_rounds(n):
    """Every computed propagate span has a matching erase; reverse halves agree."""
    assert set(round_indices(RoundKind.P_ERASE, n)) == set(round_indices(RoundKind.P, n))
    assert set(round_indices(RoundKind.REVERSE_P, n)) == set(
        round_indices(RoundKind.REVERSE_P_ERASE, n)
    )
    assert set(round_indices(RoundKind.REVERSE_C, n)) == set(round_indices(RoundKind.C, n - 1))
    assert set(round_indices(RoundKind.REVERSE_G, n)) == set(round_indices(RoundKind.G, n - 1))


def test_triple_ordering_invariant():
    for n in (3, 8, 21, 64):
        for kind in RoundKind:
            if kind in (RoundKind.REVERSE_P, RoundKind.REVERSE_P_ERASE) and n < 2:
                continue
            for tr in round_indices(kind, n):
                assert 0 <= tr.j < tr.l < tr.k <= n


def test_literal_reverse_bounds_differ():
    # the printed width-n recompute bound leaves spans unerased; kept for the report
    literal = round_indices(RoundKind.REVERSE_P_ERASE, 8, literal=True)
    fixed = round_indices(RoundKind.REVERSE_P_ERASE, 8)
    assert len(literal) == 4 and len(fixed) == 2
    assert set(fixed) < set(literal)


def test_cla_reference_examples():
    assert cla_reference(5, 7, 4) == 12
    assert cla_reference(0, 0, 4) == 0
    assert cla_reference(15, 1, 4) == 16  # ripple-all carry-out


def test_cla_reference_rejects_out_of_range():
    with pytest.raises(ValueError):
        cla_reference(4, 0, 2)
    with pytest.raises(ValueError):
        cla_reference(0, -1, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_cla_reference_exhaustive(n):
    for a in range(2**n):
        for b in range(2**n):
            assert cla_reference(a, b, n) == a + b


def test_cla_reference_random_n64():
    rng = random.Random(0)
    for _ in range(10_000):
        a, b = rng.randrange(2**64), rng.randrange(2**64)
        assert cla_reference(a, b, 64) == a + b


def test_build_rejects_zero_width():
    for design in Design:
        with pytest.raises(Exception):
            build(design, 0)


@pytest.mark.parametrize("design", list(Design))
def test_build_deterministic(design):
    assert to_json(build(design, 9)) == to_json(build(design, 9))


@pytest.mark.parametrize("design", list(Design))
@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_every_and_target_consumed_or_output(design, n):
    """Each temporary-AND write is later erased exactly once, or is a sum output."""
    circ = build(design, n)
    pending: dict = {}
    for gate in circ.gates:
        if gate.kind is GateKind.TEMP_AND:
            tgt = gate.qubits[2]
            assert pending.get(tgt, 0) == 0, f"{tgt} overwritten while live"
            pending[tgt] = pending.get(tgt, 0) + 1
        elif gate.kind is GateKind.UNCOMPUTE:
            tgt = gate.qubits[2]
            assert pending.get(tgt, 0) == 1, f"{tgt} erased while not live"
            pending[tgt] -= 1
    leftovers = [q for q, live in pending.items() if live]
    for q in leftovers:
        label = circ.labels.get(q, "")
        assert label.startswith("s"), f"unconsumed AND target {q} labeled {label!r}"


@pytest.mark.parametrize("design", list(Design))
def test_final_labels(design):
    n = 5
    circ = build(design, n)
    by_label = {lab: q for q, lab in circ.labels.items()}
    for i in range(n + 1):
        assert f"s{i}" in by_label
    for i in range(n):
        assert by_label[f"a{i}"].reg == "A"
    if design.in_place:
        assert all(by_label[f"s{i}"].reg == "B" for i in range(n))
        assert by_label[f"s{n}"].reg == "Z"
    else:
        assert all(by_label[f"s{i}"].reg == "X" for i in range(n + 1))
        assert all(by_label[f"b{i}"].reg == "B" for i in range(n))


def test_register_sizing_matches_design_contract():
    n = 8
    out1 = build(Design.OUT_FT_QCLA1, n)
    assert out1.registers["X"].size == n + 1
    assert out1.registers["Z"].size == 3 * n - 2 * hamming_weight(n) - 2 * floor_log2(n) - 1
    in1 = build(Design.IN_FT_QCLA1, n)
    assert in1.registers["Z"].size == n
    # reverse half reuses forward ancillae, so X stays at the forward-half size
    assert in1.registers["X"].size == 3 * n - 2 * hamming_weight(n) - 2 * floor_log2(n) - 1
    out2 = build(Design.OUT_FT_QCLA2, n)
    assert out2.registers["Z"].size == n - hamming_weight(n) - floor_log2(n)
