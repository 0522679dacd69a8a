"""Run the adders on both simulator backends.

The reversible backend executes Toffoli-level circuits on classical bits
(fast enough for exhaustive checks).  The statevector backend runs the
lowered Clifford+T circuit amplitude-exactly, branching on every
measurement: the sum must come out identical in every branch even though
the uncomputation measurements are random.
"""

from qcla import (
    AllBranches,
    Design,
    build,
    exhaustive_check,
    initial_state,
    lower,
    run_basis,
    simulate,
)
from qcla.revsim import read_labeled, read_register

# ---------------------------------------------------------------------------
# Classical run: 37 + 91 on the 8-bit in-place adder.
circ = build(Design.IN_FT_QCLA1, 8)
out = run_basis(circ, initial_state(circ, {"A": 37, "B": 91}))
print(f"37 + 91 = {read_labeled(circ, out, 's')}")
print(f"A restored: {read_register(circ, out, 'A') == 37}")

# ---------------------------------------------------------------------------
# Exhaustive verification against the carry-lookahead oracle.
for design in Design:
    report = exhaustive_check(design, 5)
    print(report.summary())

# ---------------------------------------------------------------------------
# Statevector with all measurement branches: deterministic despite randomness.
lowered = lower(build(Design.IN_FT_QCLA2, 3))
branches = simulate(lowered, {"A": 5, "B": 6}, AllBranches())
sums = {b.labeled_int("s") for b in branches}
total_p = sum(b.probability for b in branches)
print(f"\n5 + 6 over {len(branches)} branches: sums={sums}, total probability={total_p:.9f}")
