"""Build the adder circuits and look inside.

Each design is a pure function of (variant, width): registers, an ordered
gate list at Toffoli level, and a final wire-name map identifying where the
sum bits land.
"""

from qcla import Design, build

# ---------------------------------------------------------------------------
# An 8-bit out-of-place adder: operands in A and B, sum on the X register.
circ = build(Design.OUT_FT_QCLA1, 8)

print("registers:")
for reg in circ.registers.values():
    kind = "ancilla" if reg.is_ancilla else "data"
    print(f"  {reg.name}: {reg.size} qubits ({kind})")

print(f"\ntotal qubits: {circ.num_qubits}")
print(f"gates: {len(circ.gates)}")

hist = {}
for g in circ.gates:
    hist[g.kind.value] = hist.get(g.kind.value, 0) + 1
print("gate histogram:", hist)

# ---------------------------------------------------------------------------
# The wire-name map: where each output lives when the circuit finishes.
print("\nsum bit positions:")
sum_labels = {l: q for q, l in circ.labels.items() if l.startswith("s") and l[1:].isdigit()}
for i in range(9):
    print(f"  s{i}: {sum_labels[f's{i}']}")

# ---------------------------------------------------------------------------
# The in-place variant overwrites B with the sum and parks the carry-out on Z.
in_circ = build(Design.IN_FT_QCLA1, 8)
print("\nin-place variant:")
print(f"  qubits: {in_circ.num_qubits}")
print(f"  s8 lives on: {[q for q, l in in_circ.labels.items() if l == 's8'][0]}")
