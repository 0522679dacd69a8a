"""Self-contained verification suite and known-discrepancy ledger.

``run_validation`` re-derives every published claim this package reproduces:
exact T-count conformance of built circuits against the closed forms, qubit
conformance within a per-design constant, functional correctness against the
classical oracle, gadget unitary certification, statevector determinism,
logarithmic depth growth, and export round-trips.  Five discrepancies in the
published cost data are reproduced deliberately; they are reported in the
ledger and do not fail verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .builders import Design, RoundKind, build, round_indices
from .jsonio import from_json, to_json
from .lowering import lower
from .qasm import parse_qasm3, to_qasm3
from .resources import (
    count,
    depth_bound_fit,
    floor_log2,
    formula_qubits,
    formula_tcount,
    round_half_up,
    savings,
    savings_average,
)
from .revsim import exhaustive_check, random_check
from .statevec import AllBranches, gadget_unitary_check, simulate

# The constant measured-minus-formula qubit deltas (golden values).
QUBIT_DELTAS = {
    Design.OUT_FT_QCLA1: 0,
    Design.OUT_FT_QCLA2: 0,
    Design.IN_FT_QCLA1: -1,
    Design.IN_FT_QCLA2: -1,
}

# Individually published savings percentages reproduced by this artifact.
QUOTED_SAVINGS = [
    ("Out-FT-QCLA1", "Babu-out", "70.37"),
    ("Out-FT-QCLA1", "Lisa-out", "38.46"),
    ("Out-FT-QCLA1", "Draper-out", "54.29"),
    ("Out-FT-QCLA1", "Trisetyarso-out", "54.29"),
    ("Out-FT-QCLA1", "Thapliyal-out", "54.29"),
    ("Out-FT-QCLA2", "Babu-out", "59.26"),
    ("Out-FT-QCLA2", "Lisa-out", "15.38"),
    ("Out-FT-QCLA2", "Draper-out", "37.14"),
    ("Out-FT-QCLA2", "Trisetyarso-out", "37.14"),
    ("Out-FT-QCLA2", "Thapliyal-out", "37.14"),
    ("In-FT-QCLA1", "Takahashi08", "89.80"),
    ("In-FT-QCLA1", "Takahashi10", "59.18"),
    ("In-FT-QCLA1", "Mogensen1", "76.19"),
    ("In-FT-QCLA1", "Mogensen2", "76.19"),
    ("In-FT-QCLA1", "Draper-in", "71.43"),
    ("In-FT-QCLA1", "Trisetyarso-in", "71.43"),
    ("In-FT-QCLA1", "Thapliyal-in", "60.59"),
    ("In-FT-QCLA2", "Takahashi08", "79.59"),
    ("In-FT-QCLA2", "Takahashi10", "18.37"),
    ("In-FT-QCLA2", "Mogensen1", "52.38"),
    ("In-FT-QCLA2", "Mogensen2", "52.38"),
    ("In-FT-QCLA2", "Draper-in", "42.86"),
    ("In-FT-QCLA2", "Trisetyarso-in", "42.86"),
    ("In-FT-QCLA2", "Thapliyal-in", "21.18"),
]

# Published averages; In-FT-QCLA2's is not reproduced by any natural averaging
# of the per-baseline figures and is reported as such.
QUOTED_AVERAGES = {
    "Out-FT-QCLA1": "54.34",
    "Out-FT-QCLA2": "37.21",
    "In-FT-QCLA1": "72.11",
}
UNREPRODUCED_AVERAGE = ("In-FT-QCLA2", "35.87")


@dataclass(frozen=True)
class Discrepancy:
    """One reproduced inconsistency in the published cost data."""

    id: str
    summary: str
    values: dict


def known_discrepancies() -> list[Discrepancy]:
    in1 = Design.IN_FT_QCLA1
    table8 = formula_tcount(in1, 8, "table")
    step8 = formula_tcount(in1, 8, "per_step")
    computed_avg = round_half_up(savings_average(Design.IN_FT_QCLA2), 2)
    return [
        Discrepancy(
            "in1-closed-form-vs-stage-sum",
            "In-FT-QCLA1's published T-count closed form disagrees with the sum of its "
            "published per-stage costs by 8n - 4*floor(log2 n) - 4*floor(log2(n-1)) - 12; "
            "built circuits match the stage sum.",
            {"closed_form_at_n8": table8, "stage_sum_at_n8": step8},
        ),
        Discrepancy(
            "out-of-place-qubit-off-by-one",
            "The out-of-place prose register sizing totals one more qubit than the "
            "published qubit closed form; on-demand allocation matches the closed form.",
            {"register_sum_at_n8": 41, "closed_form_at_n8": 40},
        ),
        Discrepancy(
            "reverse-span-loop-bounds",
            "The printed loop bounds for the reverse propagate-span stages are mutually "
            "inconsistent (recompute printed at width n, erase at width n-1); the "
            "published per-stage gate counts fix both at width n-1, which is what the "
            "builders emit (the literal width-n bounds would leave spans unerased).",
            {
                "literal_recompute_count_at_n8": len(
                    round_indices(RoundKind.REVERSE_P_ERASE, 8, literal=True)
                ),
                "stage_count_at_n8": len(round_indices(RoundKind.REVERSE_P_ERASE, 8)),
            },
        ),
        Discrepancy(
            "in2-average-savings-unreproduced",
            "In-FT-QCLA2's published average T-gate savings is not reproduced by "
            "averaging the per-baseline figures; the computed average is reported.",
            {"published": UNREPRODUCED_AVERAGE[1], "computed": computed_avg},
        ),
        Discrepancy(
            "and-gadget-t-count-accounting",
            "The 4-T cost of the temporary-AND gadget counts the magic-state "
            "preparation T gate; the gadget body shows 3 explicit T-type gates. "
            "Lowering emits the preparation inline so measured T-counts match.",
            {"explicit_body_t_gates": 3, "counted_t_gates": 4},
        ),
    ]


@dataclass
class CostRow:
    design: str
    n: int
    measured_t: int
    per_step_t: int
    table_t: int
    measured_qubits: int
    formula_qubits: int


@dataclass
class ValidationReport:
    rows: list[CostRow] = field(default_factory=list)
    savings_table: list[dict] = field(default_factory=list)
    discrepancies: list[Discrepancy] = field(default_factory=list)
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append((name, bool(ok), detail))

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": n, "passed": ok, "detail": d} for n, ok, d in self.checks],
            "cost_rows": [vars(r) for r in self.rows],
            "savings": self.savings_table,
            "discrepancies": [
                {"id": d.id, "summary": d.summary, "values": d.values}
                for d in self.discrepancies
            ],
        }


def _check_costs(report: ValidationReport, n_max: int) -> None:
    t_ok, q_ok, table_ok = True, True, True
    detail = ""
    for design in Design:
        start = 2 if design.in_place else 1
        for n in range(start, n_max + 1):
            rep = count(lower(build(design, n)))
            per_step = formula_tcount(design, n, "per_step")
            table = formula_tcount(design, n, "table")
            qf = formula_qubits(design, n)
            if n in (8, 16, 32, 64) or n <= 4:
                report.rows.append(
                    CostRow(design.value, n, rep.t_count, per_step, table, rep.qubit_count, qf)
                )
            if rep.t_count != per_step:
                t_ok = False
                detail = f"{design.value} n={n}: measured {rep.t_count} != stage sum {per_step}"
            if design is not Design.IN_FT_QCLA1 and per_step != table:
                table_ok = False
                detail = f"{design.value} n={n}: stage sum {per_step} != closed form {table}"
            if rep.qubit_count - qf != QUBIT_DELTAS[design]:
                q_ok = False
                detail = f"{design.value} n={n}: qubit delta {rep.qubit_count - qf}"
    report.check("t-count conformance (measured == stage sum)", t_ok, detail)
    report.check("closed form == stage sum (except In-FT-QCLA1)", table_ok)
    report.check("qubit conformance (constant per-design delta, |delta| <= 1)", q_ok)

    in1 = Design.IN_FT_QCLA1
    delta_ok = all(
        formula_tcount(in1, n, "per_step") - formula_tcount(in1, n, "table")
        == 8 * n - 4 * floor_log2(n) - 4 * floor_log2(n - 1) - 12
        for n in range(2, n_max + 1)
    )
    report.check("In-FT-QCLA1 closed-form/stage-sum delta identity", delta_ok)


def _check_functional(report: ValidationReport, n_max: int) -> None:
    ok, detail = True, ""
    for design in Design:
        for n in range(1, n_max + 1):
            rep = exhaustive_check(design, n)
            if not rep.passed:
                ok = False
                detail = rep.summary()
        rrep = random_check(design, 64, 200)
        if not rrep.passed:
            ok = False
            detail = rrep.summary()
    report.check(f"functional correctness (exhaustive n <= {n_max}, random n = 64)", ok, detail)


def _check_gadgets(report: ValidationReport) -> None:
    worst = 0.0
    ok = True
    for gadget in ("toffoli", "and", "and_uncompute_pair"):
        chk = gadget_unitary_check(gadget)
        worst = max(worst, chk.max_deviation)
        ok = ok and chk.passed
    report.check("gadget unitary certification", ok, f"max deviation {worst:.2e}")


def _check_statevector(report: ValidationReport, widths: tuple[int, ...], inputs: int) -> None:
    import random as _random

    rng = _random.Random(42)
    ok, detail = True, ""
    for design in Design:
        for n in widths:
            circ = lower(build(design, n))
            for _ in range(inputs):
                a, b = rng.randrange(2**n), rng.randrange(2**n)
                outs = simulate(circ, {"A": a, "B": b}, AllBranches())
                sums = {o.labeled_int("s") for o in outs}
                ptot = sum(o.probability for o in outs)
                if sums != {a + b} or abs(ptot - 1) > 1e-9:
                    ok = False
                    detail = f"{design.value} n={n} a={a} b={b}: sums={sums} ptot={ptot}"
    report.check("statevector determinism across measurement branches", ok, detail)


def _check_depth(report: ValidationReport, top: int) -> None:
    ok, detail = True, ""
    sizes = [4 << i for i in range(0, (top // 4).bit_length())]
    sizes = [s for s in sizes if s <= top]
    for design in Design:
        toffoli_depths, t_depths = {}, {}
        for n in sizes:
            circ = build(design, n)
            toffoli_depths[n] = count(circ).total_depth
            t_depths[n] = count(lower(circ)).t_depth
        for label, depths in (("logical depth", toffoli_depths), ("t-depth", t_depths)):
            alpha, beta = depth_bound_fit(depths)
            prev = 0
            for n in sizes:
                if depths[n] < prev:
                    ok, detail = False, f"{design.value} {label} decreases at n={n}"
                prev = depths[n]
                if depths[n] > alpha * floor_log2(n) + beta:
                    ok, detail = (
                        False,
                        f"{design.value} {label} at n={n}: {depths[n]} > {alpha}*log+{beta}",
                    )
    report.check(f"logarithmic depth growth up to n={sizes[-1]}", ok, detail)


def _check_savings(report: ValidationReport) -> None:
    ok, detail = True, ""
    for design_label, baseline, quoted in QUOTED_SAVINGS:
        design = next(d for d in Design if d.value == design_label)
        fig = savings(design, baseline)
        delta = abs(fig.percent - Fraction(quoted))
        report.savings_table.append(
            {
                "design": design_label,
                "baseline": baseline,
                "computed": fig.display,
                "published": quoted,
            }
        )
        if delta > Fraction(1, 100):
            ok = False
            detail = f"{design_label} vs {baseline}: computed {fig.display}, published {quoted}"
    for design_label, quoted in QUOTED_AVERAGES.items():
        design = next(d for d in Design if d.value == design_label)
        avg = savings_average(design)
        if abs(avg - Fraction(quoted)) > Fraction(1, 100):
            ok = False
            detail = f"{design_label} average: computed {round_half_up(avg)}, published {quoted}"
        report.savings_table.append(
            {"design": design_label, "baseline": "average", "computed": round_half_up(avg),
             "published": quoted}
        )
    # the unreproduced average is recorded, not asserted
    avg2 = savings_average(Design.IN_FT_QCLA2)
    report.savings_table.append(
        {
            "design": UNREPRODUCED_AVERAGE[0],
            "baseline": "average",
            "computed": round_half_up(avg2),
            "published": UNREPRODUCED_AVERAGE[1] + " (unreproduced)",
        }
    )
    report.check("published savings percentages and averages (+-0.01)", ok, detail)

    dominance_ok = all(
        savings(d, "Cheng").kind == "asymptotic-dominance"
        for d in (Design.IN_FT_QCLA1, Design.IN_FT_QCLA2)
    )
    report.check("superlinear baseline reported as asymptotic dominance", dominance_ok)


def _check_roundtrip(report: ValidationReport, widths: tuple[int, ...]) -> None:
    ok, detail = True, ""
    for design in Design:
        for n in widths:
            circ = lower(build(design, n))
            text1, text2 = to_qasm3(circ), to_qasm3(lower(build(design, n)))
            if text1 != text2:
                ok, detail = False, f"{design.value} n={n}: QASM bytes unstable"
            back = parse_qasm3(text1)
            same_regs = [
                (r.name, r.size, r.inits) for r in back.registers.values()
            ] == [(r.name, r.size, r.inits) for r in circ.registers.values()]
            if not (same_regs and back.gates == circ.gates):
                ok, detail = False, f"{design.value} n={n}: QASM round-trip mismatch"
            js1, js2 = to_json(circ), to_json(lower(build(design, n)))
            if js1 != js2:
                ok, detail = False, f"{design.value} n={n}: JSON bytes unstable"
            jback = from_json(js1)
            if jback.structural_key() != circ.structural_key():
                ok, detail = False, f"{design.value} n={n}: JSON round-trip mismatch"
            tcirc = build(design, n)
            if from_json(to_json(tcirc)).structural_key() != tcirc.structural_key():
                ok, detail = False, f"{design.value} n={n}: Toffoli JSON round-trip mismatch"
    report.check("export determinism and round-trips (QASM3, JSON)", ok, detail)


def run_validation(full: bool = False) -> ValidationReport:
    """Run the verification suite; ``full`` uses the complete acceptance bounds."""
    report = ValidationReport()
    _check_costs(report, n_max=64 if full else 16)
    _check_functional(report, n_max=6 if full else 4)
    _check_gadgets(report)
    _check_statevector(report, widths=(2, 3) if full else (2,), inputs=10 if full else 3)
    _check_depth(report, top=1024 if full else 128)
    _check_savings(report)
    _check_roundtrip(report, widths=(1, 2, 4) if full else (1, 2))
    report.discrepancies = known_discrepancies()
    return report
