"""Export circuits to OpenQASM 3 and JSON, then parse them back.

Exports are byte-deterministic; the JSON schema (qcla-ir/1) round-trips the
full register table, init annotations, and the final wire-name map.
"""

from qcla import Design, build, lower
from qcla.jsonio import from_json, to_json
from qcla.qasm import parse_qasm3, to_qasm3

circ = lower(build(Design.OUT_FT_QCLA1, 2))

text = to_qasm3(circ)
print("---- OpenQASM 3 (first 20 lines) ----")
print("\n".join(text.splitlines()[:20]))

back = parse_qasm3(text)
print(f"\nround-trip gate-list equal: {back.gates == circ.gates}")
print(f"byte-stable: {to_qasm3(lower(build(Design.OUT_FT_QCLA1, 2))) == text}")

js = to_json(circ)
print(f"JSON round-trip equal: {from_json(js).structural_key() == circ.structural_key()}")
print(f"JSON size: {len(js)} bytes")
