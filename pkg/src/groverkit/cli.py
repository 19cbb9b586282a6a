"""Command-line front end: ``solve``, ``trace`` and ``sweep``.

Exit codes: 0 on success, 2 for invalid input, 1 for internal failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

from .errors import GroverError
from .grover import RunReport, Snapshot, run_grover
from .oracle import EquationProblem, build_equation_oracle
from .statevector import MAX_QUBITS, StateVector, index_to_label, sample
from .verify import sweep_table

SCHEMA_VERSION = "1"
CSV_HEADER = ["snapshot", "label", "re", "im", "prob"]


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    schema_version: str
    command: Dict[str, object]
    plan: Dict[str, object]
    snapshots: List[List[Dict[str, object]]]
    argmax: str
    argmax_prob: float
    stages: Optional[List[str]] = None
    histogram: Optional[Dict[str, int]] = None

    def to_dict(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "OutputRecord":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        return cls.from_dict(json.loads(text))


def parse_constant(text: str) -> int:
    """Decimal by default; ``0b``/``0x``/``0o`` prefixes select another base."""
    s = text.strip().lower()
    try:
        if s.startswith(("0b", "0x", "0o")):
            return int(s, 0)
        return int(s, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _snapshot_rows(snap: Snapshot, n: int) -> List[Dict[str, object]]:
    return [
        {
            "label": index_to_label(i, n),
            "re": float(snap.amplitudes[i].real),
            "im": float(snap.amplitudes[i].imag),
            "prob": float(snap.probabilities[i]),
        }
        for i in range(snap.amplitudes.shape[0])
    ]


def _stage_name(snap: Snapshot) -> str:
    if snap.stage == "init":
        return "init"
    return f"{snap.stage} {snap.iteration}"


def build_record(args, report: RunReport, snapshots: Sequence[Snapshot], with_stages: bool) -> OutputRecord:
    n = report.plan.n
    histogram = None
    if args.shots is not None:
        final = StateVector(n, snapshots[-1].amplitudes, check_norm=False)
        histogram = sample(final, args.shots, args.seed)
    return OutputRecord(
        schema_version=SCHEMA_VERSION,
        command=_command_echo(args),
        plan={
            "n": report.plan.n,
            "N": report.plan.N,
            "l": report.plan.l,
            "N_G": report.plan.N_G,
            "N_delta": report.plan.N_delta,
            "iterations": report.iterations,
        },
        snapshots=[_snapshot_rows(s, n) for s in snapshots],
        argmax=report.argmax_label,
        argmax_prob=report.argmax_probability,
        stages=[_stage_name(s) for s in snapshots] if with_stages else None,
        histogram=histogram,
    )


def _command_echo(args) -> Dict[str, object]:
    echo = {"command": args.command}
    for key in ("a", "b", "bits", "l", "iterations", "shots", "seed", "format"):
        if hasattr(args, key):
            echo[key] = getattr(args, key)
    return echo


def render_csv(record: OutputRecord) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for idx, rows in enumerate(record.snapshots):
        for row in rows:
            writer.writerow([idx, row["label"], repr(row["re"]), repr(row["im"]), repr(row["prob"])])
    return buf.getvalue()


def render_table(record: OutputRecord, marked: Sequence[str], show_trace: bool = True) -> str:
    cmd, plan = record.command, record.plan
    n = plan["n"]
    lines = [
        f"equation: (x + {cmd['a']}) mod {plan['N']} = {cmd['b']}"
        f"   [a = {cmd['a']:0{n}b}, b = {cmd['b']:0{n}b}, {n} qubits]",
        f"plan: N = {plan['N']}, l = {plan['l']}, N_G = {plan['N_G']}, "
        f"N_delta = {_fmt_ratio(plan['N_delta'])}, iterations run = {plan['iterations']}",
        f"X = {record.argmax}   probability {record.argmax_prob:.12f}",
    ]
    if record.histogram is not None:
        counts = ", ".join(f"{k}: {v}" for k, v in record.histogram.items())
        lines.append(f"histogram: {counts}")
    if show_trace:
        stages = record.stages or [f"iteration {i}" for i in range(len(record.snapshots))]
        for stage, rows in zip(stages, record.snapshots):
            lines.append("")
            lines.append(f"[{stage}]")
            lines.append(f"  {'label':>{max(n, 5)}}  {'re':>16} {'im':>16} {'prob':>16}")
            for row in rows:
                flag = "  <- marked" if row["label"] in marked else ""
                lines.append(
                    f"  {row['label']:>{max(n, 5)}}  {row['re'] + 0.0:16.12f} {row['im'] + 0.0:16.12f}"
                    f" {row['prob']:16.12f}{flag}"
                )
    return "\n".join(lines) + "\n"


def _fmt_ratio(value) -> str:
    if value is None:
        return "-"
    return f"{value:.6g}"


def _run_equation(args, record_mode: str):
    if not 1 <= args.bits <= MAX_QUBITS:
        raise UsageError(f"--bits must be in 1..{MAX_QUBITS}, got {args.bits}")
    if args.l < 1:
        raise UsageError(f"--l must be >= 1, got {args.l}")
    if args.iterations is not None and args.iterations < 0:
        raise UsageError(f"--iterations must be >= 0, got {args.iterations}")
    if getattr(args, "shots", None) is not None and args.shots < 1:
        raise UsageError(f"--shots must be >= 1, got {args.shots}")
    problem = EquationProblem(args.bits, args.a, args.b)
    oracle = build_equation_oracle(problem)
    report = run_grover(args.bits, oracle, l=args.l, iterations_override=args.iterations, record=record_mode)
    marked = [index_to_label(i, args.bits) for i in oracle.marked_indices()]
    return report, marked


def cmd_solve(args) -> str:
    report, marked = _run_equation(args, "ends" if args.final_only else "all")
    record = build_record(args, report, report.snapshots, with_stages=False)
    return _emit(record, args.format, marked, show_trace=True)


def cmd_trace(args) -> str:
    args.shots = None
    report, marked = _run_equation(args, "all")
    record = build_record(args, report, report.trace(), with_stages=True)
    return _emit(record, args.format, marked, show_trace=True)


def _emit(record: OutputRecord, fmt: str, marked, show_trace: bool) -> str:
    if fmt == "json":
        return record.to_json() + "\n"
    if fmt == "csv":
        return render_csv(record)
    return render_table(record, marked, show_trace)


def cmd_sweep(args) -> str:
    if not 2 <= args.max_bits <= 62:
        raise UsageError(f"--max-bits must be in 2..62, got {args.max_bits}")
    if args.l < 1:
        raise UsageError(f"--l must be >= 1, got {args.l}")
    rows = sweep_table(args.max_bits, args.l)
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "command": {"command": "sweep", "max_bits": args.max_bits, "l": args.l},
            "rows": [{"n": n, "N": N, "N_G": g, "N_delta": d} for n, N, g, d in rows],
        }
        return json.dumps(payload, indent=2) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "N", "N_G", "N_delta"])
        for n, N, g, d in rows:
            writer.writerow([n, N, g, "" if d is None else repr(d)])
        return buf.getvalue()
    lines = [f"{'n':>3} {'N':>20} {'N_G':>12} {'N_delta':>14}"]
    for n, N, g, d in rows:
        lines.append(f"{n:>3} {N:>20} {g:>12} {_fmt_ratio(d):>14}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groverkit",
        description="Solve (x + a) mod 2^bits = b with Grover search on a statevector simulator.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def equation_args(p):
        p.add_argument("--a", type=parse_constant, required=True, help="added constant (decimal, or 0b... binary)")
        p.add_argument("--b", type=parse_constant, required=True, help="right-hand side (decimal, or 0b... binary)")
        p.add_argument("--bits", type=int, required=True, help="register width in qubits")
        p.add_argument("--l", type=int, default=1, help="expected number of solutions (default 1)")
        p.add_argument("--iterations", type=int, default=None, help="override the planned iteration count")
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    solve = sub.add_parser("solve", help="run the search and report the most probable x")
    equation_args(solve)
    solve.add_argument("--shots", type=int, default=None, help="also sample this many measurements")
    solve.add_argument("--seed", type=int, default=None, help="sampling seed")
    solve.add_argument("--final-only", action="store_true", help="keep only the initial and final snapshots")
    solve.set_defaults(handler=cmd_solve)

    trace = sub.add_parser("trace", help="print amplitudes after every oracle and diffusion step")
    equation_args(trace)
    trace.set_defaults(handler=cmd_trace)

    sweep = sub.add_parser("sweep", help="table of N, N_G and N_delta by register width")
    sweep.add_argument("--max-bits", type=int, required=True)
    sweep.add_argument("--l", type=int, default=1)
    sweep.add_argument("--format", choices=("table", "json", "csv"), default="table")
    sweep.set_defaults(handler=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.handler(args)
    except (UsageError, GroverError) as exc:
        print(f"groverkit {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"groverkit {args.command}: internal error: {exc!r}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
