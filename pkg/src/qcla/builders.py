"""Generators for the four carry-lookahead adder circuit families.

Two out-of-place designs (sum lands on fresh ancillae, both operands
restored) and two in-place designs (sum overwrites the B register).  The
*1 variants realize every carry-network Toffoli as a temporary-AND /
uncompute gadget pair (4 T gates each after lowering); the *2 variants
emit plain Toffoli gates there instead (7 T gates each) to save the
gadget ancilla.

Bit 0 is the least significant bit everywhere; register qubit i holds
bit i of the operand.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .ir import (
    AncillaInit,
    Circuit,
    CircuitError,
    QubitRef,
    cnot,
    new_circuit,
    not_,
    temp_and,
    toffoli,
    uncompute,
)


class Design(Enum):
    """The four generated adder variants."""

    OUT_FT_QCLA1 = "Out-FT-QCLA1"
    OUT_FT_QCLA2 = "Out-FT-QCLA2"
    IN_FT_QCLA1 = "In-FT-QCLA1"
    IN_FT_QCLA2 = "In-FT-QCLA2"

    @property
    def in_place(self) -> bool:
        return self in (Design.IN_FT_QCLA1, Design.IN_FT_QCLA2)

    @property
    def uses_and_pairs(self) -> bool:
        """True when carry merges use AND/uncompute pairs instead of Toffolis."""
        return self in (Design.OUT_FT_QCLA1, Design.IN_FT_QCLA1)

    @property
    def key(self) -> str:
        return {
            Design.OUT_FT_QCLA1: "out1",
            Design.OUT_FT_QCLA2: "out2",
            Design.IN_FT_QCLA1: "in1",
            Design.IN_FT_QCLA2: "in2",
        }[self]


def design_from_key(key: str) -> Design:
    for d in Design:
        if d.key == key or d.value == key:
            return d
    raise ValueError(f"unknown design {key!r}")


class RoundKind(Enum):
    P = "p"
    G = "g"
    C = "c"
    P_ERASE = "p_erase"
    REVERSE_P_ERASE = "reverse_p_erase"
    REVERSE_C = "reverse_c"
    REVERSE_G = "reverse_g"
    REVERSE_P = "reverse_p"


REVERSE_KINDS = frozenset(
    {RoundKind.REVERSE_P_ERASE, RoundKind.REVERSE_C, RoundKind.REVERSE_G, RoundKind.REVERSE_P}
)


class RoundTriple(NamedTuple):
    """Wire indices for one carry-network gate at level t, position m.

    P/G rounds: j = 2^t*m, l = j + 2^(t-1), k = j + 2^t.
    C rounds:   j = 0,     l = 2^t*m,       k = l + 2^(t-1).
    """

    t: int
    m: int
    j: int
    l: int
    k: int


def floor_log2(n: int) -> int:
    if n < 1:
        raise ValueError("floor_log2 requires n >= 1")
    return n.bit_length() - 1


def _c_level_max(n: int) -> int:
    # floor(log2(2n/3)) in exact integer arithmetic; negative for n = 1.
    if 2 * n < 3:
        return -1
    v, t = 2 * n // 3, 0
    # largest t with 3 * 2^t <= 2n
    while 3 * (2 ** (t + 1)) <= 2 * n:
        t += 1
    return t


def _p_rounds(n: int, descending: bool = False) -> list[RoundTriple]:
    levels = range(1, floor_log2(n)) if n >= 1 else range(0)
    out = []
    for t in (reversed(levels) if descending else levels):
        half, full = 2 ** (t - 1), 2**t
        for m in range(1, n // full):
            j = full * m
            out.append(RoundTriple(t, m, j, j + half, j + full))
    return out


def _g_rounds(n: int, descending: bool = False) -> list[RoundTriple]:
    levels = range(1, floor_log2(n) + 1)
    out = []
    for t in (reversed(levels) if descending else levels):
        half, full = 2 ** (t - 1), 2**t
        for m in range(0, n // full):
            j = full * m
            out.append(RoundTriple(t, m, j, j + half, j + full))
    return out


def _c_rounds(n: int, descending: bool = True) -> list[RoundTriple]:
    tmax = _c_level_max(n)
    levels = range(1, tmax + 1)
    out = []
    for t in (reversed(levels) if descending else levels):
        half, full = 2 ** (t - 1), 2**t
        for m in range(1, (n - half) // full + 1):
            l = full * m
            out.append(RoundTriple(t, m, 0, l, l + half))
    return out


def round_indices(kind: RoundKind, n: int, literal: bool = False) -> list[RoundTriple]:
    """Enumerate the carry-network gate indices for one round kind at width n.

    Forward rounds (P, G, C, P_ERASE) run at width n.  Reverse rounds belong to
    the in-place designs' uncomputation half, which operates on the (n-1)-bit
    network over operand A and the complemented sum; they enumerate the
    corresponding forward sets at width n-1 with the outer loop direction
    flipped.  ``literal=True`` instead returns the width-n bounds as printed
    for the reverse recompute stage; those leave spans unerased and are kept
    only for the discrepancy report.
    """
    if kind in REVERSE_KINDS:
        if n < 2:
            raise ValueError("reverse rounds require n >= 2")
    elif n < 1:
        raise ValueError("rounds require n >= 1")
    if kind is RoundKind.P:
        return _p_rounds(n)
    if kind is RoundKind.G:
        return _g_rounds(n)
    if kind is RoundKind.C:
        return _c_rounds(n, descending=True)
    if kind is RoundKind.P_ERASE:
        return _p_rounds(n, descending=True)
    if kind is RoundKind.REVERSE_P_ERASE:
        return _p_rounds(n if literal else n - 1)
    if kind is RoundKind.REVERSE_C:
        return _c_rounds(n if literal else n - 1, descending=False)
    if kind is RoundKind.REVERSE_G:
        return _g_rounds(n if literal else n - 1, descending=True)
    if kind is RoundKind.REVERSE_P:
        return _p_rounds(n - 1, descending=True)
    raise ValueError(f"unknown round kind {kind}")


def cla_reference(a: int, b: int, n: int) -> int:
    """Classical carry-lookahead oracle: the generate/propagate recurrence.

    Computes the (n+1)-bit sum through per-bit generate g_i = a_i & b_i and
    propagate p_i = a_i ^ b_i with carries c_{i+1} = (p_i & c_i) | g_i, never
    through native addition.
    """
    if n < 1:
        raise ValueError("width must be >= 1")
    if not 0 <= a < 2**n or not 0 <= b < 2**n:
        raise ValueError(f"operands must lie in [0, 2^{n})")
    p = [(a >> i & 1) ^ (b >> i & 1) for i in range(n)]
    g = [(a >> i & 1) & (b >> i & 1) for i in range(n)]
    c = g[0]
    s = p[0]
    for i in range(1, n):
        s |= (c ^ p[i]) << i
        c = (p[i] & c) | g[i]
    s |= c << n
    return s


class _Net:
    """Shared carry-network emission helpers for one build."""

    def __init__(self, circ: Circuit, use_pairs: bool):
        self.circ = circ
        self.use_pairs = use_pairs
        # live wire maps: interval (lo, hi) -> qubit currently holding the value
        self.p: dict[tuple[int, int], QubitRef] = {}
        self.g: dict[tuple[int, int], QubitRef] = {}
        # snapshot pool of spent ancillae available for re-initialization
        self.pool: list[QubitRef] = []

    def alloc(self, label: str) -> QubitRef:
        if self.pool:
            q = self.pool.pop(0)
        else:
            q = self.circ.allocate_ancilla(AncillaInit.MAGIC_A)
        self.circ.labels[q] = label
        return q

    def emit_and(self, c1: QubitRef, c2: QubitRef, label: str) -> QubitRef:
        tgt = self.alloc(label)
        self.circ.append(temp_and(c1, c2, tgt))
        return tgt

    def emit_carry_merge(self, c1: QubitRef, c2: QubitRef, target: QubitRef) -> None:
        """Toffoli action onto target, via AND pair or a plain Toffoli."""
        if self.use_pairs:
            tmp = self.alloc("tmp")
            self.circ.append(temp_and(c1, c2, tmp))
            self.circ.append(cnot(tmp, target))
            self.circ.append(uncompute(c1, c2, tmp))
            self.circ.labels[tmp] = "spent"
            self.circ.free_ancilla(tmp)
        else:
            self.circ.append(toffoli(c1, c2, target))

    def p_round(self, triples: list[RoundTriple]) -> None:
        for tr in triples:
            src1, src2 = self.p[(tr.j, tr.l)], self.p[(tr.l, tr.k)]
            self.p[(tr.j, tr.k)] = self.emit_and(src1, src2, f"p[{tr.j},{tr.k}]")

    def g_round(self, triples: list[RoundTriple]) -> None:
        for tr in triples:
            tgt = self.g.pop((tr.l, tr.k))
            self.emit_carry_merge(self.g[(tr.j, tr.l)], self.p[(tr.l, tr.k)], tgt)
            self.g[(tr.j, tr.k)] = tgt
            self.circ.labels[tgt] = f"g[{tr.j},{tr.k}]"

    def c_round(self, triples: list[RoundTriple]) -> None:
        for tr in triples:
            tgt = self.g.pop((tr.l, tr.k))
            self.emit_carry_merge(self.g[(0, tr.l)], self.p[(tr.l, tr.k)], tgt)
            self.g[(0, tr.k)] = tgt
            self.circ.labels[tgt] = f"g[0,{tr.k}]"

    def reverse_c_round(self, triples: list[RoundTriple]) -> None:
        # inverse of a C merge: target currently labeled g[0,k], reverts to g[l,k]
        for tr in triples:
            tgt = self.g.pop((0, tr.k))
            self.emit_carry_merge(self.g[(0, tr.l)], self.p[(tr.l, tr.k)], tgt)
            self.g[(tr.l, tr.k)] = tgt
            self.circ.labels[tgt] = f"g[{tr.l},{tr.k}]"

    def reverse_g_round(self, triples: list[RoundTriple]) -> None:
        for tr in triples:
            tgt = self.g.pop((tr.j, tr.k))
            self.emit_carry_merge(self.g[(tr.j, tr.l)], self.p[(tr.l, tr.k)], tgt)
            self.g[(tr.l, tr.k)] = tgt
            self.circ.labels[tgt] = f"g[{tr.l},{tr.k}]"

    def p_erase(self, triples: list[RoundTriple]) -> None:
        for tr in triples:
            tgt = self.p.pop((tr.j, tr.k))
            self.circ.append(uncompute(self.p[(tr.j, tr.l)], self.p[(tr.l, tr.k)], tgt))
            self.circ.labels[tgt] = "spent"
            self.circ.free_ancilla(tgt)


def _build_out_of_place(design: Design, n: int) -> Circuit:
    circ = new_circuit(
        [
            ("A", n, None),
            ("B", n, None),
            ("X", n + 1, [AncillaInit.ZERO] + [AncillaInit.MAGIC_A] * n),
        ],
        ancilla_register="Z",
    )
    A = [QubitRef("A", i) for i in range(n)]
    B = [QubitRef("B", i) for i in range(n)]
    X = [QubitRef("X", i) for i in range(n + 1)]
    for i in range(n):
        circ.labels[A[i]] = f"a{i}"
        circ.labels[B[i]] = f"b{i}"

    net = _Net(circ, design.uses_and_pairs)

    # Step 1: per-bit generate bits onto the magic ancillae X[1..n].
    for i in range(n):
        circ.append(temp_and(A[i], B[i], X[i + 1]))
        net.g[(i, i + 1)] = X[i + 1]
        circ.labels[X[i + 1]] = f"g[{i},{i + 1}]"
    # Step 2: per-bit propagate bits in place on B (bit 0 is never needed).
    for i in range(1, n):
        circ.append(cnot(A[i], B[i]))
        net.p[(i, i + 1)] = B[i]
        circ.labels[B[i]] = f"p[{i},{i + 1}]"
    # Steps 3-6: propagate spans, carry merges, completed carries, span erasure.
    net.p_round(round_indices(RoundKind.P, n))
    net.g_round(round_indices(RoundKind.G, n))
    net.c_round(round_indices(RoundKind.C, n))
    net.p_erase(round_indices(RoundKind.P_ERASE, n))
    # Step 7: fold propagate bits into the carries to form sum bits 1..n-1;
    # X[0] picks up b0.
    for i in range(1, n):
        circ.append(cnot(B[i], net.g[(0, i)]))
    circ.append(cnot(B[0], X[0]))
    # Step 8: restore B to b, complete s0 = a0 xor b0 on X[0].
    for i in range(1, n):
        circ.append(cnot(A[i], B[i]))
        circ.labels[B[i]] = f"b{i}"
    circ.append(cnot(A[0], X[0]))

    for i in range(n + 1):
        circ.labels[X[i]] = f"s{i}"
    return circ


def _build_in_place(design: Design, n: int) -> Circuit:
    circ = new_circuit(
        [
            ("A", n, None),
            ("B", n, None),
            ("Z", n, [AncillaInit.MAGIC_A] * n),
        ],
        ancilla_register="X",
    )
    A = [QubitRef("A", i) for i in range(n)]
    B = [QubitRef("B", i) for i in range(n)]
    Z = [QubitRef("Z", i) for i in range(n)]
    for i in range(n):
        circ.labels[A[i]] = f"a{i}"
        circ.labels[B[i]] = f"b{i}"

    net = _Net(circ, design.uses_and_pairs)

    # Step 1: generate bits onto the Z register.
    for i in range(n):
        circ.append(temp_and(A[i], B[i], Z[i]))
        net.g[(i, i + 1)] = Z[i]
        circ.labels[Z[i]] = f"g[{i},{i + 1}]"
    # Step 2: propagate bits in place on B, bit 0 included (its complement
    # seeds the uncomputation network and the final sum bit s0).
    for i in range(n):
        circ.append(cnot(A[i], B[i]))
        net.p[(i, i + 1)] = B[i]
        circ.labels[B[i]] = f"p[{i},{i + 1}]"
    # Steps 3-6: forward carry network at width n, as in the out-of-place case.
    net.p_round(round_indices(RoundKind.P, n))
    net.g_round(round_indices(RoundKind.G, n))
    net.c_round(round_indices(RoundKind.C, n))
    net.p_erase(round_indices(RoundKind.P_ERASE, n))
    # Step 7: sum bits into B (carries stay intact on Z for uncomputation).
    for i in range(1, n):
        circ.append(cnot(net.g[(0, i)], B[i]))
        circ.labels[B[i]] = f"s{i}"
    # Steps 8-9: complement sum bits 0..n-2 and rebuild propagate bits of the
    # (n-1)-wide network over (a, not-s), whose carry chain equals the original.
    for i in range(n - 1):
        circ.append(not_(B[i]))
    for i in range(1, n - 1):
        circ.append(cnot(A[i], B[i]))

    if n >= 2:
        # The reverse half draws its gadget ancillae from the pool spent in the
        # forward half, one slot per gate, matching the published register sizing.
        net.pool = list(circ._free)
        circ._free = []
        net.p = {(i, i + 1): B[i] for i in range(1, n - 1)}
        for i in range(1, n - 1):
            circ.labels[B[i]] = f"p[{i},{i + 1}]"
        # Steps 10-13: recompute spans, unmerge carries, erase spans (width n-1).
        net.p_round(round_indices(RoundKind.REVERSE_P_ERASE, n))
        net.reverse_c_round(round_indices(RoundKind.REVERSE_C, n))
        net.reverse_g_round(round_indices(RoundKind.REVERSE_G, n))
        net.p_erase(round_indices(RoundKind.REVERSE_P, n))
        # Step 14: back to complemented sum bits.
        for i in range(1, n - 1):
            circ.append(cnot(A[i], B[i]))
        # Step 15: erase the per-bit generate values g'_i = a_i & not-s_i.
        for i in range(n - 1):
            circ.append(uncompute(A[i], B[i], Z[i]))
            circ.labels[Z[i]] = "spent"
    # Step 16: uncomplement; B now holds sum bits 0..n-1, Z[n-1] holds s_n.
    for i in range(n - 1):
        circ.append(not_(B[i]))

    for i in range(n):
        circ.labels[B[i]] = f"s{i}"
    circ.labels[Z[n - 1]] = f"s{n}"
    return circ


def build(design: Design, n: int) -> Circuit:
    """Construct the requested adder at Toffoli level for n-bit operands.

    Deterministic: identical (design, n) produce structurally identical
    circuits.  n = 1 takes the degenerate path (every carry-network round is
    empty).
    """
    if n < 1:
        raise CircuitError("operand width must be >= 1")
    if design.in_place:
        return _build_in_place(design, n)
    return _build_out_of_place(design, n)
