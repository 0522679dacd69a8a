"""Command-line interface.

Subcommands: ``gen`` (emit a circuit), ``cost`` (measured vs closed-form
resources), ``sim`` (add two numbers on a simulator backend), ``compare``
(cost catalog with savings percentages), ``verify`` (the full verification
suite with the known-discrepancy ledger).

Usage errors exit 2 (argparse); verification or formula-mismatch failures
exit 1.  The environment variable QCLA_SEED overrides the default
simulation seed of 42.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .builders import Design, build, design_from_key
from .jsonio import to_json
from .lowering import lower
from .qasm import to_qasm3
from .resources import (
    IN_PLACE_BASELINES,
    OUT_OF_PLACE_BASELINES,
    catalog_cost,
    count,
    formula_qubits,
    formula_tcount,
    round_half_up,
    savings,
    savings_average,
)
from .revsim import initial_state, read_labeled, run_basis
from .statevec import AllBranches, SeededRandom, simulate
from .validate import UNREPRODUCED_AVERAGE, run_validation

DESIGN_KEYS = ["out1", "out2", "in1", "in2"]


def _default_seed() -> int:
    try:
        return int(os.environ.get("QCLA_SEED", "42"))
    except ValueError:
        return 42


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _cmd_gen(args) -> int:
    design = design_from_key(args.design)
    circ = build(design, args.n)
    if args.level == "cliffordt":
        circ = lower(circ)
    if args.format == "qasm3":
        if args.level != "cliffordt":
            print("error: qasm3 output requires --level cliffordt", file=sys.stderr)
            return 2
        _write(to_qasm3(circ), args.output)
    else:
        _write(to_json(circ), args.output)
    return 0


def _cmd_cost(args) -> int:
    design = design_from_key(args.design)
    rows = []
    mismatch = False
    start = max(args.n_from, 2 if design.in_place else 1)
    for n in range(start, args.n_to + 1):
        rep = count(lower(build(design, n)))
        row = {
            "design": design.value,
            "n": n,
            "t_count": rep.t_count,
            "t_depth": rep.t_depth,
            "total_depth": rep.total_depth,
            "qubits": rep.qubit_count,
            "cnots": rep.cnot_count,
            "measurements": rep.measurement_count,
        }
        if args.check_formulas:
            row["stage_sum_t"] = formula_tcount(design, n, "per_step")
            row["closed_form_t"] = formula_tcount(design, n, "table")
            row["closed_form_qubits"] = formula_qubits(design, n)
            row["t_delta"] = row["t_count"] - row["stage_sum_t"]
            row["qubit_delta"] = row["qubits"] - row["closed_form_qubits"]
            if row["t_delta"] != 0:
                mismatch = True
        rows.append(row)
    if not rows:
        print("error: empty width range", file=sys.stderr)
        return 2
    if args.format == "json":
        _write(json.dumps(rows, indent=2) + "\n", args.output)
    else:
        sep = "," if args.format == "csv" else "  "
        keys = list(rows[0].keys())
        lines = [sep.join(keys)]
        for row in rows:
            lines.append(sep.join(str(row[k]) for k in keys))
        _write("\n".join(lines) + "\n", args.output)
    return 1 if mismatch else 0


def _cmd_sim(args) -> int:
    design = design_from_key(args.design)
    circ = build(design, args.n)
    if args.backend == "reversible":
        out = run_basis(circ, initial_state(circ, {"A": args.a, "B": args.b}))
        total = read_labeled(circ, out, "s")
        print(total)
        return 0 if total == args.a + args.b else 1
    lowered = lower(circ)
    if args.branches == "all":
        strategy = AllBranches()
    elif args.branches == "seed":
        strategy = SeededRandom(_default_seed())
    elif args.branches.startswith("seed:"):
        strategy = SeededRandom(int(args.branches.split(":", 1)[1]))
    else:
        print(f"error: --branches must be 'all', 'seed' or 'seed:S', got {args.branches!r}",
              file=sys.stderr)
        return 2
    outcomes = simulate(lowered, {"A": args.a, "B": args.b}, strategy)
    sums = {o.labeled_int("s") for o in outcomes}
    for o in outcomes:
        print(f"sum={o.labeled_int('s')} probability={o.probability:.6f} cbits={o.cbits}")
    if sums == {args.a + args.b}:
        print(f"verdict: deterministic, correct ({args.a} + {args.b} = {args.a + args.b})")
        return 0
    print(f"verdict: MISMATCH (expected {args.a + args.b}, read {sorted(sums)})")
    return 1


def _cmd_compare(args) -> int:
    in_place = args.table == "in"
    designs = (
        [Design.IN_FT_QCLA1, Design.IN_FT_QCLA2]
        if in_place
        else [Design.OUT_FT_QCLA1, Design.OUT_FT_QCLA2]
    )
    baselines = IN_PLACE_BASELINES if in_place else OUT_OF_PLACE_BASELINES
    n = args.n
    lines = [f"{'design':<18}{'T-count':>14}{'qubits':>10}  savings vs baselines"]
    for label in baselines:
        cost = catalog_cost(label, n)
        t_str = str(cost.t_count) if cost.t_is_integer else f"{cost.t_count} (non-integer)"
        approx = " (approx)" if cost.approximate else ""
        lines.append(f"{label:<18}{t_str:>14}{str(cost.qubits):>10}{approx}")
    for design in designs:
        rep = count(lower(build(design, n)))
        parts = []
        for label in baselines:
            fig = savings(design, label)
            parts.append(f"{label}: {fig.display}")
        avg = round_half_up(savings_average(design), 2)
        note = ""
        if design.value == UNREPRODUCED_AVERAGE[0]:
            note = f" (published {UNREPRODUCED_AVERAGE[1]}, unreproduced)"
        lines.append(
            f"{design.value:<18}{rep.t_count:>14}{rep.qubit_count:>10}  "
            + "; ".join(parts)
            + f"; average: {avg}{note}"
        )
    _write("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_verify(args) -> int:
    report = run_validation(full=args.full)
    for name, ok, detail in report.checks:
        status = "pass" if ok else "FAIL"
        suffix = f"  [{detail}]" if detail and not ok else ""
        print(f"{status}  {name}{suffix}")
    print(f"known discrepancies reproduced: {len(report.discrepancies)}")
    for d in report.discrepancies:
        print(f"  - {d.id}: {d.values}")
    out = args.output or "validation_report.json"
    with open(out, "w") as fh:
        json.dump(report.to_dict(), fh, indent=2)
    print(f"report written to {out}")
    return 0 if report.passed else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcla", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a circuit")
    p.add_argument("--design", required=True, choices=DESIGN_KEYS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", choices=["toffoli", "cliffordt"], default="toffoli")
    p.add_argument("--format", choices=["qasm3", "json"], default="json")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("cost", help="measured resources vs closed forms")
    p.add_argument("--design", required=True, choices=DESIGN_KEYS)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--check-formulas", action="store_true")
    p.add_argument("--format", choices=["table", "csv", "json"], default="table")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_cost)

    p = sub.add_parser("sim", help="add two numbers on a simulator")
    p.add_argument("--design", required=True, choices=DESIGN_KEYS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--backend", choices=["reversible", "statevector"], default="reversible")
    p.add_argument("--branches", default="all",
                   help='"all", "seed" (QCLA_SEED, default 42) or "seed:S"')
    p.set_defaults(func=_cmd_sim)

    p = sub.add_parser("compare", help="cost catalog with savings percentages")
    p.add_argument("--table", required=True, choices=["out", "in"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--full", action="store_true", help="complete acceptance bounds")
    p.add_argument("-o", "--output", default=None, help="report path (default validation_report.json)")
    p.set_defaults(func=_cmd_verify)
    return parser


def cli(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses exit code 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
