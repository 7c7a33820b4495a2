"""Command-line front end.

    python main.py pair --n 1 --m 2 --kind clones
    python main.py fig1 --m-max 50 --format json
    python main.py tripartite --n 1 --m 3
    python main.py verify --m-cap 5
    python main.py state --n 2 --m 5
    python main.py sweep --n-max 6 --m-max 12
    python main.py describe --n 1 --m 3

Exit codes: 0 success, 1 domain or usage error, 2 verification failure.
"""
import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional

import numpy as np
import psutil
from tabulate import tabulate

from clone_entanglement import cloner_summary, describe_cloner
from clone_entanglement.cloner_core import CloneSpec, output_state
from clone_entanglement.common import ClonerDomainError, VerificationFailure, format_decimal, format_rational
from clone_entanglement.entanglement_measures import (
    concurrence_clone_ancilla_closed, concurrence_x_form, eof_from_concurrence, ppt_three_clone,
)
from clone_entanglement.exact import QuadraticSurd, Rational
from clone_entanglement.reduced_states import (
    clone_ancilla_state, closed_form_clone_ancilla_state, closed_form_two_clone_state, single_clone_fidelity,
    three_clone_state, two_clone_state,
)
from clone_entanglement.verification import MAX_ORACLE_M, raise_on_failure, run_oracle_suite


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2

FORMATS = ("csv", "json", "table")

PAIR_CLONES_HEADER = ["N", "M", "a", "c", "e", "concurrence", "concurrence_exact_zero", "eof", "fidelity"]
PAIR_ANCILLA_HEADER = ["N", "M", "a", "b", "c", "d", "e", "concurrence", "concurrence_exact_zero", "eof", "fidelity"]
FIG1_HEADER = ["M", "concurrence"]
TRIPARTITE_HEADER = ["N", "M", "p0", "p1", "p2", "p3", "npt", "witness"]
STATE_HEADER = ["N", "M", "j", "alpha_sq"]
SWEEP_HEADER = ["N", "M", "clones_exact_zero", "clone_ancilla_exact_zero", "tripartite_npt", "fidelity"]
VERIFY_HEADER = ["N", "M", "check", "deviation", "tolerance", "passed"]
DESCRIBE_HEADER = ["quantity", "exact", "value"]


class UsageError(ClonerDomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _text(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Rational):
        return format_rational(value)
    if isinstance(value, QuadraticSurd):
        return format_rational(value.to_fraction()) if value.is_rational else str(value)
    if isinstance(value, float):
        return format_decimal(value)
    return str(value)


def _json_value(value):
    if isinstance(value, (Rational, QuadraticSurd)):
        return {"exact": _text(value), "decimal": format_decimal(float(value))}
    if isinstance(value, float):
        return format_decimal(value)
    return value


def render(header: List[str], rows: List[list], fmt: str) -> str:
    """Render rows into a single string; each row lists values in header order."""
    if fmt == "json":
        return json.dumps([{k: _json_value(v) for k, v in zip(header, row)} for row in rows], indent=2) + "\n"
    if fmt == "table":
        return tabulate([[_text(v) for v in row] for row in rows], headers=header, tablefmt="grid") + "\n"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([[_text(v) for v in row] for row in rows])
    return buffer.getvalue()


def _emit(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _spec(args) -> CloneSpec:
    return CloneSpec(args.n, args.m)


def cmd_pair(args) -> str:
    spec = _spec(args)
    if args.kind == "clones":
        state = closed_form_two_clone_state(spec) if args.closed_form else two_clone_state(spec)
    else:
        state = closed_form_clone_ancilla_state(spec) if args.closed_form else clone_ancilla_state(spec)
    if state is None:
        raise ClonerDomainError(f"no closed form for {args.kind} at N={spec.n_inputs}, M={spec.m_outputs}")
    concurrence = concurrence_x_form(state)
    measures = [concurrence.value, concurrence.exact_zero, eof_from_concurrence(concurrence.value),
                single_clone_fidelity(spec)]
    if args.kind == "clones":
        row = [spec.n_inputs, spec.m_outputs, state.a, state.c, state.e] + measures
        return render(PAIR_CLONES_HEADER, [row], args.format)
    row = [spec.n_inputs, spec.m_outputs, state.a, state.b, state.c, state.d, state.e] + measures
    return render(PAIR_ANCILLA_HEADER, [row], args.format)


def cmd_fig1(args) -> str:
    if args.m_max < 2:
        raise UsageError(f"--m-max must be at least 2, got {args.m_max}")
    rows = [[m, float(concurrence_clone_ancilla_closed(m))] for m in range(2, args.m_max + 1)]
    return render(FIG1_HEADER, rows, args.format)


def cmd_tripartite(args) -> str:
    spec = _spec(args)
    if spec.m_outputs < 3:
        raise UsageError(f"tripartite analysis needs M >= 3, got M={spec.m_outputs}")
    mixture = three_clone_state(spec)
    verdict = ppt_three_clone(mixture)
    row = [spec.n_inputs, spec.m_outputs, *mixture.weights, verdict.is_npt, verdict.witness.value]
    return render(TRIPARTITE_HEADER, [row], args.format)


def cmd_state(args) -> str:
    spec = _spec(args)
    rows = [[spec.n_inputs, spec.m_outputs, j, w] for j, w in enumerate(output_state(spec).amp_sq)]
    return render(STATE_HEADER, rows, args.format)


def cmd_sweep(args) -> str:
    if args.n_max < 1 or args.m_max < 1:
        raise UsageError("--n-max and --m-max must be positive")
    rows = []
    for m in range(1, args.m_max + 1):
        for n in range(1, min(args.n_max, m) + 1):
            spec = CloneSpec(n, m)
            clones = ancilla = npt = None
            if m >= 2:
                clones = concurrence_x_form(two_clone_state(spec)).exact_zero
                ancilla = concurrence_x_form(clone_ancilla_state(spec)).exact_zero
            if m >= 3:
                npt = ppt_three_clone(three_clone_state(spec)).is_npt
            rows.append([n, m, clones, ancilla, npt, single_clone_fidelity(spec)])
    return render(SWEEP_HEADER, rows, args.format)


def cmd_describe(args) -> str:
    spec = _spec(args)
    if args.format == "table":
        return describe_cloner(spec) + "\n"
    rows = [[row["Quantity"], row["Exact"], row["Value"]] for row in cloner_summary(spec)]
    return render(DESCRIBE_HEADER, rows, args.format)


def cmd_verify(args) -> str:
    if not 1 <= args.m_cap <= MAX_ORACLE_M:
        raise UsageError(f"--m-cap must satisfy 1 <= m-cap <= {MAX_ORACLE_M}, got {args.m_cap}")
    results = run_oracle_suite(args.m_cap, trials=args.trials, rng=np.random.default_rng(args.seed))
    logger.info("resident memory after suite: %.1f MiB", psutil.Process().memory_info().rss / 2 ** 20)
    rows = [[r.n_inputs, r.m_outputs, r.check, float(r.deviation), float(r.tolerance), r.passed] for r in results]
    report = render(VERIFY_HEADER, rows, args.format)
    try:
        raise_on_failure(results)
    except VerificationFailure as failure:
        failure.report = report
        raise
    return report


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="csv")
    common.add_argument("--output", default=None, help="output file, standard output by default")

    parser = _Parser(prog="clone_entanglement", description="Entanglement in the output of the universal qubit cloner.")
    commands = parser.add_subparsers(dest="command", parser_class=_Parser)
    commands.required = True

    pair = commands.add_parser("pair", parents=[common], help="two-qubit reduction and its concurrence")
    pair.add_argument("--n", type=int, required=True)
    pair.add_argument("--m", type=int, required=True)
    pair.add_argument("--kind", choices=("clones", "clone-ancilla"), default="clones")
    pair.add_argument("--closed-form", action="store_true", help="use the closed form where one exists")
    pair.set_defaults(handler=cmd_pair)

    fig1 = commands.add_parser("fig1", parents=[common], help="clone-ancilla concurrence of the 1 -> M cloner")
    fig1.add_argument("--m-max", type=int, default=50)
    fig1.set_defaults(handler=cmd_fig1)

    tripartite = commands.add_parser("tripartite", parents=[common], help="three-clone mixture and PPT verdict")
    tripartite.add_argument("--n", type=int, required=True)
    tripartite.add_argument("--m", type=int, required=True)
    tripartite.set_defaults(handler=cmd_tripartite)

    state = commands.add_parser("state", parents=[common], help="Schmidt weights alpha_j^2")
    state.add_argument("--n", type=int, required=True)
    state.add_argument("--m", type=int, required=True)
    state.set_defaults(handler=cmd_state)

    sweep = commands.add_parser("sweep", parents=[common], help="separability map over an (N, M) grid")
    sweep.add_argument("--n-max", type=int, default=5)
    sweep.add_argument("--m-max", type=int, default=10)
    sweep.set_defaults(handler=cmd_sweep)

    describe = commands.add_parser("describe", parents=[common], help="summary table for one cloner")
    describe.add_argument("--n", type=int, required=True)
    describe.add_argument("--m", type=int, required=True)
    describe.set_defaults(handler=cmd_describe, format="table")

    verify = commands.add_parser("verify", parents=[common], help="oracle-equivalence suite")
    verify.add_argument("--m-cap", type=int, default=MAX_ORACLE_M)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    output = None
    try:
        args = build_parser().parse_args(argv)
        output = args.output
        logger.info("running %s", args.command)
        _emit(args.handler(args), output)
    except VerificationFailure as failure:
        try:
            _emit(getattr(failure, "report", ""), output)
        except OSError as error:
            sys.stderr.write(f"error: {error}\n")
        sys.stderr.write(f"verification failed: {failure}\n")
        return EXIT_VERIFICATION
    except (ValueError, OSError) as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_USAGE
    return EXIT_OK
