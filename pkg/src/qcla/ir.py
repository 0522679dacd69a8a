"""Circuit intermediate representation shared by builders, lowering, analysis and simulators.

A circuit is a table of named qubit registers plus an ordered gate list.
Circuits carry a level tag: Toffoli-level circuits use the logical gate set
(NOT, CNOT, Toffoli, temporary-AND, uncompute) while Clifford+T circuits use
the fault-tolerant primitive set (H, T, T{dag}, S, S{dag}, Z, CZ, X, CNOT,
X-basis measurement and classically controlled Z/X).

Registers are either data registers (no declared initial state) or ancilla
registers where every qubit carries an :class:`AncillaInit` annotation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, NamedTuple, Sequence


class CircuitError(ValueError):
    """Raised for malformed circuits: bad operands, level mismatches, etc."""


class AncillaInit(Enum):
    """Initial state annotation for ancilla qubits.

    ZERO is |0>.  MAGIC_A is the magic resource state
    (|0> + e^{i pi/4}|1>)/sqrt(2) consumed by the 4-T logical-AND gadget.
    """

    ZERO = "zero"
    MAGIC_A = "magic_a"


class Level(Enum):
    TOFFOLI = "toffoli"
    CLIFFORD_T = "cliffordt"


class AllocPolicy(Enum):
    FRESH = "fresh"
    REUSE = "reuse"


class QubitRef(NamedTuple):
    reg: str
    index: int

    def __str__(self) -> str:
        return f"{self.reg}[{self.index}]"


class GateKind(Enum):
    # Toffoli-level logical gates
    NOT = "not"
    CNOT = "cnot"
    TOFFOLI = "toffoli"
    TEMP_AND = "temp_and"
    UNCOMPUTE = "uncompute"
    # Clifford+T primitives
    H = "h"
    T = "t"
    TDG = "tdg"
    S = "s"
    SDG = "sdg"
    Z = "z"
    CZ = "cz"
    MEASURE_X = "measure_x"
    CC_Z = "cc_z"
    CC_X = "cc_x"


# NOT and CNOT are legal at both levels.
TOFFOLI_ONLY = frozenset({GateKind.TOFFOLI, GateKind.TEMP_AND, GateKind.UNCOMPUTE})
CLIFFORD_T_ONLY = frozenset(
    {
        GateKind.H,
        GateKind.T,
        GateKind.TDG,
        GateKind.S,
        GateKind.SDG,
        GateKind.Z,
        GateKind.CZ,
        GateKind.MEASURE_X,
        GateKind.CC_Z,
        GateKind.CC_X,
    }
)
T_KINDS = frozenset({GateKind.T, GateKind.TDG})


class Gate(NamedTuple):
    """One gate application: a kind, its qubit operands, optional classical bit.

    The classical bit is the measurement destination for MEASURE_X and the
    condition bit for CC_Z / CC_X.
    """

    kind: GateKind
    qubits: tuple[QubitRef, ...]
    cbit: int | None = None


def not_(q: QubitRef) -> Gate:
    return Gate(GateKind.NOT, (q,))


def cnot(control: QubitRef, target: QubitRef) -> Gate:
    return Gate(GateKind.CNOT, (control, target))


def toffoli(c1: QubitRef, c2: QubitRef, target: QubitRef) -> Gate:
    return Gate(GateKind.TOFFOLI, (c1, c2, target))


def temp_and(c1: QubitRef, c2: QubitRef, target: QubitRef) -> Gate:
    return Gate(GateKind.TEMP_AND, (c1, c2, target))


def uncompute(c1: QubitRef, c2: QubitRef, target: QubitRef) -> Gate:
    return Gate(GateKind.UNCOMPUTE, (c1, c2, target))


def h(q: QubitRef) -> Gate:
    return Gate(GateKind.H, (q,))


def t(q: QubitRef) -> Gate:
    return Gate(GateKind.T, (q,))


def tdg(q: QubitRef) -> Gate:
    return Gate(GateKind.TDG, (q,))


def s(q: QubitRef) -> Gate:
    return Gate(GateKind.S, (q,))


def sdg(q: QubitRef) -> Gate:
    return Gate(GateKind.SDG, (q,))


def z(q: QubitRef) -> Gate:
    return Gate(GateKind.Z, (q,))


def cz(q1: QubitRef, q2: QubitRef) -> Gate:
    return Gate(GateKind.CZ, (q1, q2))


def measure_x(q: QubitRef, cbit: int | None = None) -> Gate:
    """H followed by a Z-basis measurement; cbit is assigned at append time."""
    return Gate(GateKind.MEASURE_X, (q,), cbit)


def cc_z(cbit: int, q1: QubitRef, q2: QubitRef) -> Gate:
    return Gate(GateKind.CC_Z, (q1, q2), cbit)


def cc_x(cbit: int, q: QubitRef) -> Gate:
    return Gate(GateKind.CC_X, (q,), cbit)


@dataclass
class Register:
    """A named block of qubits; ``inits`` is None for data registers."""

    name: str
    size: int
    inits: list[AncillaInit] | None = None

    def __post_init__(self) -> None:
        if self.size < 0:
            raise CircuitError(f"register {self.name!r} has negative length")
        if self.inits is not None and len(self.inits) != self.size:
            raise CircuitError(
                f"register {self.name!r}: {len(self.inits)} inits for {self.size} qubits"
            )

    @property
    def is_ancilla(self) -> bool:
        return self.inits is not None


# Wire labels: "a3", "b0", "s5", "p[2,4]", "g[0,8]", "free", "spent".
WireNameMap = dict  # QubitRef -> str


@dataclass
class Circuit:
    """Register table + ordered gate list + level tag.

    Construction is append-only; consumers treat finished circuits as frozen.
    ``labels`` holds the final wire-name map set by the builders, identifying
    sum bits and restored operands.
    """

    registers: dict[str, Register] = field(default_factory=dict)
    gates: list[Gate] = field(default_factory=list)
    level: Level = Level.TOFFOLI
    num_cbits: int = 0
    labels: WireNameMap = field(default_factory=dict)
    ancilla_register: str = "anc"
    _free: list[QubitRef] = field(default_factory=list, repr=False)

    # -- register/qubit structure -------------------------------------------------

    @property
    def num_qubits(self) -> int:
        return sum(r.size for r in self.registers.values())

    def qubits(self) -> Iterator[QubitRef]:
        """All qubits in register-table order (the simulator qubit order)."""
        for reg in self.registers.values():
            for i in range(reg.size):
                yield QubitRef(reg.name, i)

    def qubit_positions(self) -> dict[QubitRef, int]:
        return {q: i for i, q in enumerate(self.qubits())}

    def init_of(self, q: QubitRef) -> AncillaInit | None:
        reg = self.registers[q.reg]
        return None if reg.inits is None else reg.inits[q.index]

    def resolves(self, q: QubitRef) -> bool:
        reg = self.registers.get(q.reg)
        return reg is not None and 0 <= q.index < reg.size

    def add_register(self, name: str, size: int, inits: list[AncillaInit] | None = None) -> None:
        if name in self.registers:
            raise CircuitError(f"duplicate register name {name!r}")
        self.registers[name] = Register(name, size, inits)

    # -- gate appends ---------------------------------------------------------------

    def append(self, gate: Gate) -> "Circuit":
        """Validate and append one gate; returns self for chaining."""
        for q in gate.qubits:
            if not self.resolves(q):
                raise CircuitError(f"operand {q} does not resolve in the register table")
        if len(set(gate.qubits)) != len(gate.qubits):
            raise CircuitError(f"duplicate operands in gate {gate.kind.value}")
        if self.level is Level.TOFFOLI and gate.kind in CLIFFORD_T_ONLY:
            raise CircuitError(f"{gate.kind.value} is not a Toffoli-level gate")
        if self.level is Level.CLIFFORD_T and gate.kind in TOFFOLI_ONLY:
            raise CircuitError(f"{gate.kind.value} is not a Clifford+T gate")
        if gate.kind is GateKind.TEMP_AND:
            if self.init_of(gate.qubits[2]) is not AncillaInit.MAGIC_A:
                raise CircuitError(
                    f"temporary-AND target {gate.qubits[2]} is not a magic-state ancilla"
                )
        if gate.kind is GateKind.MEASURE_X:
            if gate.cbit is None:
                gate = Gate(gate.kind, gate.qubits, self.num_cbits)
            self.num_cbits = max(self.num_cbits, gate.cbit + 1)
        elif gate.kind in (GateKind.CC_Z, GateKind.CC_X):
            if gate.cbit is None or not 0 <= gate.cbit < self.num_cbits:
                raise CircuitError(f"{gate.kind.value} references unknown classical bit")
        self.gates.append(gate)
        return self

    def extend(self, gates: Sequence[Gate]) -> "Circuit":
        for g in gates:
            self.append(g)
        return self

    # -- ancilla allocation ----------------------------------------------------------

    def allocate_ancilla(
        self, init: AncillaInit, policy: AllocPolicy = AllocPolicy.FRESH
    ) -> QubitRef:
        """Return an ancilla qubit of the requested initial state.

        FRESH always extends the ancilla register.  REUSE returns the oldest
        previously freed ancilla with a matching init when one exists; the
        returned qubit counts as re-initialized.
        """
        if policy is AllocPolicy.REUSE:
            for i, q in enumerate(self._free):
                if self.init_of(q) is init:
                    return self._free.pop(i)
        if self.ancilla_register not in self.registers:
            self.add_register(self.ancilla_register, 0, [])
        reg = self.registers[self.ancilla_register]
        assert reg.inits is not None
        reg.inits.append(init)
        reg.size += 1
        return QubitRef(reg.name, reg.size - 1)

    def free_ancilla(self, q: QubitRef) -> None:
        if not self.resolves(q):
            raise CircuitError(f"cannot free unknown qubit {q}")
        self._free.append(q)

    def structural_key(self) -> tuple:
        """Hashable key for structural equality (registers, gates, level, labels)."""
        regs = tuple(
            (r.name, r.size, None if r.inits is None else tuple(i.value for i in r.inits))
            for r in self.registers.values()
        )
        labels = tuple(sorted((str(q), lab) for q, lab in self.labels.items()))
        return (self.level.value, regs, self.num_cbits, tuple(self.gates), labels)


def new_circuit(
    register_spec: Sequence[tuple[str, int, list[AncillaInit] | None]],
    level: Level = Level.TOFFOLI,
    ancilla_register: str = "anc",
) -> Circuit:
    """Create an empty circuit from (name, length, init-list) register specs.

    An init-list of None declares a data register; otherwise it must supply one
    :class:`AncillaInit` per qubit.
    """
    circ = Circuit(level=level, ancilla_register=ancilla_register)
    for name, size, inits in register_spec:
        circ.add_register(name, size, list(inits) if inits is not None else None)
    return circ


