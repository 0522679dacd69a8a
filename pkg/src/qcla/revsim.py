"""Classical basis-state execution of Toffoli-level circuits.

Magic-state ancillae are modeled as 0 at this level: every such qubit is
first written by a temporary-AND, which overwrites it with the AND of its
controls.  Uncompute gates assert that their target equals the AND of the
two controls and then mark the target spent (a classical qubit); later use
of a spent qubit is an error unless it is re-initialized as a fresh
temporary-AND target.

``exhaustive_check`` evaluates all 2^(2n) operand pairs in one pass by
carrying one bitmask per qubit (bit i of the mask = that qubit's value on
input number i), so gates become bitwise integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .builders import Design, build, cla_reference
from .ir import Circuit, GateKind, Level, QubitRef


class UncomputeAssertionError(AssertionError):
    """An uncompute target did not equal the AND of its controls."""

    def __init__(self, gate_index: int, message: str = ""):
        self.gate_index = gate_index
        super().__init__(message or f"uncompute assertion failed at gate {gate_index}")


class SpentQubitUseError(ValueError):
    """A measured-out (spent) qubit was used as a live operand."""

    def __init__(self, gate_index: int, qubit: QubitRef):
        self.gate_index = gate_index
        self.qubit = qubit
        super().__init__(f"spent qubit {qubit} used at gate {gate_index}")


@dataclass
class BasisState:
    """One classical bit per qubit plus per-qubit spent flags."""

    bits: dict[QubitRef, int]
    spent: set[QubitRef] = field(default_factory=set)

    def copy(self) -> "BasisState":
        return BasisState(dict(self.bits), set(self.spent))


def initial_state(circ: Circuit, register_values: dict[str, int]) -> BasisState:
    """Build the input state: data registers from the given integers, ancillae 0."""
    bits: dict[QubitRef, int] = {}
    for reg in circ.registers.values():
        value = register_values.get(reg.name)
        if reg.inits is None and value is None:
            raise ValueError(f"data register {reg.name!r} needs an input value")
        if value is not None and not 0 <= value < 2**reg.size:
            raise ValueError(f"value {value} does not fit register {reg.name!r}[{reg.size}]")
        for i in range(reg.size):
            bits[QubitRef(reg.name, i)] = (value >> i) & 1 if value is not None else 0
    return BasisState(bits)


def run_basis(circ: Circuit, state: BasisState) -> BasisState:
    """Execute the circuit on a basis state; returns the final state.

    Linear in gate count.  Raises UncomputeAssertionError or
    SpentQubitUseError on contract violations (builder bugs).
    """
    if circ.level is not Level.TOFFOLI:
        raise ValueError("run_basis executes Toffoli-level circuits only")
    st = state.copy()
    bits, spent = st.bits, st.spent
    for idx, gate in enumerate(circ.gates):
        kind = gate.kind
        if kind is GateKind.TEMP_AND:
            c1, c2, tgt = gate.qubits
            for q in (c1, c2):
                if q in spent:
                    raise SpentQubitUseError(idx, q)
            if tgt in spent:
                spent.discard(tgt)  # allocator re-initialized this qubit
            elif bits[tgt] != 0:
                raise UncomputeAssertionError(idx, f"AND target {tgt} not fresh at gate {idx}")
            bits[tgt] = bits[c1] & bits[c2]
            continue
        for q in gate.qubits:
            if q in spent:
                raise SpentQubitUseError(idx, q)
        if kind is GateKind.NOT:
            q = gate.qubits[0]
            bits[q] ^= 1
        elif kind is GateKind.CNOT:
            c, tq = gate.qubits
            bits[tq] ^= bits[c]
        elif kind is GateKind.TOFFOLI:
            c1, c2, tq = gate.qubits
            bits[tq] ^= bits[c1] & bits[c2]
        elif kind is GateKind.UNCOMPUTE:
            c1, c2, tq = gate.qubits
            if bits[tq] != bits[c1] & bits[c2]:
                raise UncomputeAssertionError(idx)
            spent.add(tq)
        else:
            raise ValueError(f"unexpected gate kind {kind} at Toffoli level")
    return st


def read_register(circ: Circuit, state: BasisState, name: str) -> int:
    reg = circ.registers[name]
    return sum(state.bits[QubitRef(name, i)] << i for i in range(reg.size))


def read_labeled(circ: Circuit, state: BasisState, prefix: str = "s") -> int:
    """Read the integer spelled by labels prefix0, prefix1, ... in the name map."""
    value = 0
    for q, label in circ.labels.items():
        if label.startswith(prefix) and label[len(prefix) :].isdigit():
            value |= state.bits[q] << int(label[len(prefix) :])
    return value


def sum_qubits(circ: Circuit) -> dict[int, QubitRef]:
    """Positions of the sum bits s0..sn in the final wire-name map."""
    out: dict[int, QubitRef] = {}
    for q, label in circ.labels.items():
        if label.startswith("s") and label[1:].isdigit():
            out[int(label[1:])] = q
    return out


@dataclass
class CheckReport:
    design: str
    n: int
    total: int
    mismatches: list[tuple[int, int, int, int]]  # (a, b, expected, got)
    assertion_failures: list[str]
    restoration_failures: list[str]
    labels_ok: bool

    @property
    def passed(self) -> bool:
        return (
            not self.mismatches
            and not self.assertion_failures
            and not self.restoration_failures
            and self.labels_ok
        )

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"{self.design} n={self.n}: {self.total - len(self.mismatches)}/{self.total} {status}"


def _index_bit_mask(bit: int, total_bits: int) -> int:
    """Bitmask over 2^total_bits positions whose index has ``bit`` set."""
    block = (1 << (1 << bit)) - 1
    period = 1 << (bit + 1)
    mask = 0
    for start in range(1 << bit, 1 << total_bits, period):
        mask |= block << start
    return mask


class _MaskRun:
    """Bit-parallel executor: one integer bitmask per qubit, one bit per input."""

    def __init__(self, circ: Circuit, num_slots: int):
        self.full = (1 << num_slots) - 1
        self.num_slots = num_slots
        self.bits: dict[QubitRef, int] = {q: 0 for q in circ.qubits()}
        self.spent: set[QubitRef] = set()
        self.failures: list[str] = []
        self.circ = circ

    def run(self) -> None:
        bits, spent = self.bits, self.spent
        for idx, gate in enumerate(self.circ.gates):
            kind = gate.kind
            if kind is GateKind.TEMP_AND:
                c1, c2, tgt = gate.qubits
                spent.discard(tgt)
                bits[tgt] = bits[c1] & bits[c2]
            elif kind is GateKind.NOT:
                bits[gate.qubits[0]] ^= self.full
            elif kind is GateKind.CNOT:
                c, tq = gate.qubits
                bits[tq] ^= bits[c]
            elif kind is GateKind.TOFFOLI:
                c1, c2, tq = gate.qubits
                bits[tq] ^= bits[c1] & bits[c2]
            elif kind is GateKind.UNCOMPUTE:
                c1, c2, tq = gate.qubits
                if bits[tq] != bits[c1] & bits[c2]:
                    bad = bits[tq] ^ (bits[c1] & bits[c2])
                    self.failures.append(
                        f"gate {idx}: uncompute target {tq} wrong on "
                        f"{bin(bad).count('1')} inputs"
                    )
                spent.add(tq)


def exhaustive_check(design: Design, n: int, max_n: int = 6) -> CheckReport:
    """Run every (a, b) pair through the built circuit and compare with the oracle.

    The oracle is the classical generate/propagate recurrence, cross-checked
    against native addition.  Also verifies operand restoration and that the
    final wire-name map points at the right qubits.
    """
    if n > max_n:
        raise ValueError(f"exhaustive check capped at n = {max_n}")
    circ = build(design, n)
    width = 2 * n  # input index = (a << n) | b
    runner = _MaskRun(circ, 1 << width)
    bits = runner.bits
    for i in range(n):
        bits[QubitRef("A", i)] = _index_bit_mask(n + i, width)
        bits[QubitRef("B", i)] = _index_bit_mask(i, width)
    a_in = {i: bits[QubitRef("A", i)] for i in range(n)}
    b_in = {i: bits[QubitRef("B", i)] for i in range(n)}
    runner.run()

    # expected sum masks from the oracle (and oracle self-check vs native +)
    total = 1 << width
    expected = [0] * (n + 1)
    mismatch_mask = 0
    for idx in range(total):
        a, b = idx >> n, idx & ((1 << n) - 1)
        s = cla_reference(a, b, n)
        if s != a + b:
            raise AssertionError(f"oracle self-check failed at a={a} b={b}")
        for j in range(n + 1):
            expected[j] |= ((s >> j) & 1) << idx

    sums = sum_qubits(circ)
    labels_ok = set(sums) == set(range(n + 1))
    for j in range(n + 1):
        if labels_ok:
            mismatch_mask |= bits[sums[j]] ^ expected[j]

    restoration: list[str] = []
    for i in range(n):
        if bits[QubitRef("A", i)] != a_in[i]:
            restoration.append(f"A[{i}] not restored")
    if not design.in_place:
        for i in range(n):
            if bits[QubitRef("B", i)] != b_in[i]:
                restoration.append(f"B[{i}] not restored")

    mismatches = []
    bad = mismatch_mask
    while bad and len(mismatches) < 8:
        idx = (bad & -bad).bit_length() - 1
        a, b = idx >> n, idx & ((1 << n) - 1)
        got = sum(((bits[sums[j]] >> idx) & 1) << j for j in range(n + 1)) if labels_ok else -1
        mismatches.append((a, b, a + b, got))
        bad &= bad - 1
    if mismatch_mask and len(mismatches) == 8:
        mismatches.append((-1, -1, -1, -1))  # truncated marker

    return CheckReport(
        design=design.value,
        n=n,
        total=total,
        mismatches=mismatches,
        assertion_failures=runner.failures,
        restoration_failures=restoration,
        labels_ok=labels_ok,
    )


def random_check(design: Design, n: int, pairs: int, seed: int = 42) -> CheckReport:
    """Check ``pairs`` random operand pairs at width n in one bit-parallel pass."""
    import random as _random

    rng = _random.Random(seed)
    samples = [(rng.randrange(2**n), rng.randrange(2**n)) for _ in range(pairs)]
    circ = build(design, n)
    runner = _MaskRun(circ, pairs)
    bits = runner.bits
    for i in range(n):
        bits[QubitRef("A", i)] = sum(((a >> i) & 1) << j for j, (a, _) in enumerate(samples))
        bits[QubitRef("B", i)] = sum(((b >> i) & 1) << j for j, (_, b) in enumerate(samples))
    a_in = {i: bits[QubitRef("A", i)] for i in range(n)}
    b_in = {i: bits[QubitRef("B", i)] for i in range(n)}
    runner.run()

    sums = sum_qubits(circ)
    labels_ok = set(sums) == set(range(n + 1))
    mismatches: list[tuple[int, int, int, int]] = []
    if labels_ok:
        for j, (a, b) in enumerate(samples):
            want = cla_reference(a, b, n)
            got = sum(((bits[sums[k]] >> j) & 1) << k for k in range(n + 1))
            if got != want or want != a + b:
                mismatches.append((a, b, a + b, got))
                if len(mismatches) >= 8:
                    break
    restoration: list[str] = []
    for i in range(n):
        if bits[QubitRef("A", i)] != a_in[i]:
            restoration.append(f"A[{i}] not restored")
    if not design.in_place:
        for i in range(n):
            if bits[QubitRef("B", i)] != b_in[i]:
                restoration.append(f"B[{i}] not restored")
    return CheckReport(
        design=design.value,
        n=n,
        total=pairs,
        mismatches=mismatches,
        assertion_failures=runner.failures,
        restoration_failures=restoration,
        labels_ok=labels_ok,
    )
