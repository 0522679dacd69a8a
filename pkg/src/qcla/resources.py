"""Resource measurement, depth scheduling, closed-form cost models, savings.

Cost expressions are linear combinations over the basis {n, w(n), w(n-1),
floor(log2 n), floor(log2(n-1)), 1} plus optional quadratic/cubic terms for
one catalog entry; evaluation is exact (Fraction arithmetic, integer inputs).
Percent savings compare leading n-coefficients and render with two decimals,
rounding half up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .builders import Design
from .ir import Circuit, GateKind, Level, T_KINDS


def hamming_weight(n: int) -> int:
    """Number of ones in the binary expansion of n."""
    if n < 0:
        raise ValueError("hamming_weight requires n >= 0")
    return bin(n).count("1")


def floor_log2(n: int) -> int:
    """floor(log2 n) from the bit length; exact, no floating point."""
    if n < 1:
        raise ValueError("floor_log2 requires n >= 1")
    return n.bit_length() - 1


# ---------------------------------------------------------------------------
# measured resources


@dataclass
class ResourceReport:
    """Measured resources of one circuit.

    T fields are None for Toffoli-level circuits (no T gates exist yet);
    depth is reported at both levels, counting each logical gate as one unit
    at Toffoli level.
    """

    level: str
    qubit_count: int
    gate_histogram: dict[str, int]
    cnot_count: int
    measurement_count: int
    total_depth: int
    t_count: int | None = None
    t_depth: int | None = None


def schedule(circ: Circuit) -> tuple[int, int]:
    """ASAP layering: (total_depth, t_depth).

    A gate's layer is one past the latest layer of any gate sharing a qubit,
    or of the measurement producing a classical bit it is conditioned on.
    t_depth is the depth of the T-gate dependency cone: T and T-dagger cost
    one T layer, every other gate is free but still synchronizes its
    operands (the usual T-depth with free Clifford gates).
    """
    qubit_layer: dict = {}
    cbit_layer: dict[int, int] = {}
    t_cone: dict = {}
    t_cbit: dict[int, int] = {}
    total = 0
    t_depth = 0
    for gate in circ.gates:
        layer = 0
        cone = 0
        for q in gate.qubits:
            layer = max(layer, qubit_layer.get(q, 0))
            cone = max(cone, t_cone.get(q, 0))
        if gate.kind in (GateKind.CC_Z, GateKind.CC_X):
            layer = max(layer, cbit_layer.get(gate.cbit, 0))
            cone = max(cone, t_cbit.get(gate.cbit, 0))
        layer += 1
        if gate.kind in T_KINDS:
            cone += 1
        for q in gate.qubits:
            qubit_layer[q] = layer
            t_cone[q] = cone
        if gate.kind is GateKind.MEASURE_X:
            cbit_layer[gate.cbit] = layer
            t_cbit[gate.cbit] = cone
        if layer > total:
            total = layer
        if cone > t_depth:
            t_depth = cone
    return total, t_depth


def count(circ: Circuit) -> ResourceReport:
    """Single-pass gate histogram plus scheduled depths."""
    hist: dict[str, int] = {}
    for gate in circ.gates:
        hist[gate.kind.value] = hist.get(gate.kind.value, 0) + 1
    total_depth, t_depth = schedule(circ)
    report = ResourceReport(
        level=circ.level.value,
        qubit_count=circ.num_qubits,
        gate_histogram=hist,
        cnot_count=hist.get("cnot", 0),
        measurement_count=hist.get("measure_x", 0),
        total_depth=total_depth,
    )
    if circ.level is Level.CLIFFORD_T:
        report.t_count = hist.get("t", 0) + hist.get("tdg", 0)
        report.t_depth = t_depth
    return report


# ---------------------------------------------------------------------------
# closed-form cost models

_BASIS = ("n", "w", "log", "w1", "log1", "const", "n2", "n3")


@dataclass(frozen=True)
class CostExpr:
    """Exact linear form over {n, w(n), log2(n), w(n-1), log2(n-1), 1, n^2, n^3}."""

    n: Fraction = Fraction(0)
    w: Fraction = Fraction(0)
    log: Fraction = Fraction(0)
    w1: Fraction = Fraction(0)
    log1: Fraction = Fraction(0)
    const: Fraction = Fraction(0)
    n2: Fraction = Fraction(0)
    n3: Fraction = Fraction(0)

    def evaluate(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("cost forms need n >= 1")
        if (self.w1 or self.log1) and n < 2:
            raise ValueError("cost form uses w(n-1)/log(n-1); needs n >= 2")
        value = (
            self.n * n
            + self.w * hamming_weight(n)
            + self.log * floor_log2(n)
            + self.const
            + self.n2 * n * n
            + self.n3 * n**3
        )
        if self.w1 or self.log1:
            value += self.w1 * hamming_weight(n - 1) + self.log1 * floor_log2(n - 1)
        return value

    @property
    def superlinear(self) -> bool:
        return bool(self.n2 or self.n3)


def _expr(n=0, w=0, log=0, w1=0, log1=0, const=0, n2=0, n3=0) -> CostExpr:
    return CostExpr(*(Fraction(v) for v in (n, w, log, w1, log1, const, n2, n3)))


@dataclass(frozen=True)
class CostModel:
    """One catalog row: T-count and qubit closed forms for a design."""

    label: str
    t_form: CostExpr
    qubit_form: CostExpr
    approximate: bool = False  # published only as an approximation
    min_n: int = 1
    notes: str = ""


# T-count and qubit closed forms of the four generated designs.
DESIGN_COSTS: dict[Design, CostModel] = {
    Design.OUT_FT_QCLA1: CostModel(
        "Out-FT-QCLA1", _expr(n=16, w=-8, log=-8, const=-4), _expr(n=6, w=-2, log=-2)
    ),
    Design.OUT_FT_QCLA2: CostModel(
        "Out-FT-QCLA2", _expr(n=22, w=-11, log=-11, const=-7), _expr(n=4, w=-1, log=-1, const=1)
    ),
    Design.IN_FT_QCLA1: CostModel(
        "In-FT-QCLA1",
        _expr(n=20, w=-8, w1=-8, log=-4, log1=-4, const=-8),
        _expr(n=6, w=-2, log=-2),
        min_n=2,
        notes="closed form disagrees with the per-stage sum; see discrepancy report",
    ),
    Design.IN_FT_QCLA2: CostModel(
        "In-FT-QCLA2",
        _expr(n=40, w=-11, log=-11, w1=-11, log1=-11, const=-32),
        _expr(n=4, w=-1, log=-1, const=1),
        min_n=2,
    ),
}

# Published prior-work cost catalog (closed forms only; constructions are out
# of scope).  "-out" rows are out-of-place baselines; the rest are in-place.
CATALOG: dict[str, CostModel] = {
    "Draper-out": CostModel(
        "Draper-out", _expr(n=35, w=-21, log=-21, const=-7), _expr(n=4, w=-1, log=-1, const=1)
    ),
    "Trisetyarso-out": CostModel(
        "Trisetyarso-out", _expr(n=35, w=-21, log=-21, const=-7), _expr(n=4, w=-1, log=-1, const=1)
    ),
    "Thapliyal-out": CostModel("Thapliyal-out", _expr(n=35, const=-14), _expr(n=4, const=1)),
    "Babu-out": CostModel("Babu-out", _expr(n=54), _expr(n=12, const=1)),
    "Lisa-out": CostModel("Lisa-out", _expr(n=26), _expr(n=6, const=1)),
    "Draper-in": CostModel(
        "Draper-in",
        _expr(n=70, w=-21, log=-21, w1=-21, log1=-21, const=-49),
        _expr(n=4, w=-1, log=-1, const=1),
        min_n=2,
    ),
    "Trisetyarso-in": CostModel(
        "Trisetyarso-in",
        _expr(n=70, w=-21, log=-21, w1=-21, log1=-21, const=-49),
        _expr(n=4, w=-1, log=-1, const=1),
        min_n=2,
    ),
    "Thapliyal-in": CostModel(
        "Thapliyal-in", _expr(n=Fraction(203, 4), const=-28), _expr(n=4, const=1)
    ),
    "Takahashi08": CostModel("Takahashi08", _expr(n=196), _expr(n=5), approximate=True),
    "Takahashi10": CostModel("Takahashi10", _expr(n=49), _expr(n=5), approximate=True),
    "Cheng": CostModel(
        "Cheng",
        _expr(n3=Fraction(14, 6), n2=Fraction(21, 6), n=Fraction(-49, 6)),
        _expr(n=3, const=1),
    ),
    "Mogensen1": CostModel(
        "Mogensen1", _expr(n=84, const=-56), _expr(n=3, const=-1), approximate=True
    ),
    "Mogensen2": CostModel(
        "Mogensen2",
        _expr(n=84, const=-56),
        _expr(n=3, log=-1, const=-1),
        approximate=True,
        notes="qubit form printed without a floor on the log term; evaluated with floor(log2 n)",
    ),
}

OUT_OF_PLACE_BASELINES = ["Babu-out", "Lisa-out", "Draper-out", "Trisetyarso-out", "Thapliyal-out"]
IN_PLACE_BASELINES = [
    "Takahashi08",
    "Takahashi10",
    "Mogensen1",
    "Mogensen2",
    "Draper-in",
    "Trisetyarso-in",
    "Thapliyal-in",
]


def _per_step_counts(design: Design, n: int) -> list[tuple[str, int, int]]:
    """(stage, gadget count, T per gadget) per T-consuming stage of a design."""
    w, lg = hamming_weight(n), floor_log2(n)
    merge_t = 4 if design.uses_and_pairs else 7
    steps = [
        ("initial generate bits", n, 4),
        ("propagate spans", max(n - w - lg, 0), 4),
        ("carry merges", max(n - w, 0), merge_t),
        ("completed carries", max(n - lg - 1, 0), merge_t),
    ]
    if design.in_place:
        if n < 2:
            raise ValueError("in-place per-step form needs n >= 2")
        w1, lg1 = hamming_weight(n - 1), floor_log2(n - 1)
        steps += [
            ("reverse propagate spans", max(n - 1 - w1 - lg1, 0), 4),
            ("reverse completed carries", max(n - lg1 - 2, 0), merge_t),
            ("reverse carry merges", max(n - 1 - w1, 0), merge_t),
        ]
    return steps


def formula_tcount(design: Design, n: int, source: str = "table") -> int:
    """Evaluate a design's T-count closed form.

    source="table" evaluates the published closed form; source="per_step" sums
    the per-stage gadget costs.  The two agree for all designs except
    In-FT-QCLA1, where they differ by 8n - 4*floor(log2 n) -
    4*floor(log2(n-1)) - 12 (a known inconsistency this artifact reproduces).
    """
    model = DESIGN_COSTS[design]
    if n < model.min_n:
        raise ValueError(f"{model.label} cost form needs n >= {model.min_n}")
    if source == "table":
        value = model.t_form.evaluate(n)
        assert value.denominator == 1
        return int(value)
    if source == "per_step":
        return sum(count * t_per for _, count, t_per in _per_step_counts(design, n))
    raise ValueError(f"unknown formula source {source!r}")


def formula_qubits(design: Design, n: int) -> int:
    model = DESIGN_COSTS[design]
    if n < model.min_n:
        raise ValueError(f"{model.label} cost form needs n >= {model.min_n}")
    value = model.qubit_form.evaluate(n)
    assert value.denominator == 1
    return int(value)


@dataclass(frozen=True)
class CatalogCost:
    label: str
    t_count: Fraction
    qubits: Fraction
    approximate: bool

    @property
    def t_is_integer(self) -> bool:
        return self.t_count.denominator == 1


def catalog_cost(label: str, n: int) -> CatalogCost:
    """Exact rational evaluation of one catalog row at width n.

    Non-integer values (the cubic row at some n) are returned as exact
    rationals, never silently rounded.
    """
    if label not in CATALOG:
        raise KeyError(f"unknown catalog label {label!r}")
    model = CATALOG[label]
    if n < model.min_n:
        raise ValueError(f"{model.label} cost form needs n >= {model.min_n}")
    return CatalogCost(
        label=label,
        t_count=model.t_form.evaluate(n),
        qubits=model.qubit_form.evaluate(n),
        approximate=model.approximate,
    )


# ---------------------------------------------------------------------------
# savings


def round_half_up(value: Fraction, places: int = 2) -> str:
    """Exact half-up rounding of a rational, rendered with fixed decimals."""
    scale = 10**places
    scaled = value * scale
    units = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if units < 0 else ""
    units = abs(units)
    return f"{sign}{units // scale}.{units % scale:0{places}d}"


@dataclass(frozen=True)
class SavingsFigure:
    """Leading-coefficient T-gate savings of one design over one baseline."""

    design: str
    baseline: str
    percent: Fraction | None  # None for asymptotic-dominance baselines
    kind: str = "ratio"  # or "asymptotic-dominance"

    @property
    def display(self) -> str:
        if self.percent is None:
            return "asymptotic-dominance"
        return round_half_up(self.percent, 2)


def savings(design: Design, baseline: str) -> SavingsFigure:
    """100 * (1 - lead_new / lead_baseline) on the leading n coefficient.

    A superlinear baseline (the cubic catalog row) has no linear lead
    coefficient; the result is the asymptotic-dominance sentinel.
    """
    new = DESIGN_COSTS[design].t_form
    base = CATALOG[baseline].t_form
    if base.superlinear:
        return SavingsFigure(DESIGN_COSTS[design].label, baseline, None, "asymptotic-dominance")
    percent = 100 * (1 - new.n / base.n)
    return SavingsFigure(DESIGN_COSTS[design].label, baseline, percent)


def savings_average(design: Design) -> Fraction:
    """Arithmetic mean of per-baseline savings (superlinear baselines excluded)."""
    baselines = IN_PLACE_BASELINES if design.in_place else OUT_OF_PLACE_BASELINES
    figures = [savings(design, b) for b in baselines]
    values = [f.percent for f in figures if f.percent is not None]
    return sum(values, Fraction(0)) / len(values)


def depth_bound_fit(depths: dict[int, int]) -> tuple[int, int]:
    """Fit depth = alpha * floor(log2 n) + beta through the n = 4 and n = 8 points."""
    alpha = depths[8] - depths[4]
    beta = depths[4] - 2 * alpha
    return alpha, beta
