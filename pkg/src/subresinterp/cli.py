"""Command-line front end: ``solve``, ``subres``, ``verify``, ``crosscheck``.

Input is one JSON document on stdin (or ``--input PATH``); output is one JSON
document on stdout. Exit codes: 0 solved / passed, 2 no solution / failed,
1 usage or input error.
"""

from __future__ import annotations

import argparse
import sys

from . import interp
from .crosscheck import cross_check
from .documents import (
    DocumentError,
    dumps,
    error_to_json,
    field_to_json,
    loads,
    outcome_to_json,
    parse_field,
    parse_poly,
    parse_problem,
    poly_to_json,
)
from .field import FieldSpec
from .generate import mixed_batch
from .interp import ProblemError, Solution
from .linalg import build_confluent_vandermonde
from .subres import sres_det_table, sres_prs, sylvester_body

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2

_ENGINES = {"prs": sres_prs, "det": sres_det_table}


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _emit(doc) -> None:
    sys.stdout.write(dumps(doc) + "\n")


def _debug(name: str, matrix) -> None:
    sys.stderr.write(dumps({"matrix": name, "rows": matrix.to_strings()}) + "\n")


def cmd_solve(args) -> int:
    problem = parse_problem(loads(_read_input(args.input)), args.convention)
    if args.method == interp.SYLVESTER and not problem.is_cauchy:
        raise CliError("method 'sylvester' needs every point to carry exactly one value")
    if args.debug_matrices:
        _debug("confluent_vandermonde", build_confluent_vandermonde(list(problem.nodes), problem.ell))
    outcome = interp.solve(problem, args.method, args.engine)
    method = interp.SUBRESULTANT if args.method == "auto" else args.method
    if isinstance(outcome, Solution):
        if args.debug_matrices:
            _debug("determinantal_body", interp.determinantal_blocks(problem, outcome.pivot_d))
        verdict = interp.verify_solution(problem, outcome.num, outcome.den)
        if not verdict:
            raise CliError(f"internal error: solution failed verification ({verdict.condition})")
    _emit(outcome_to_json(outcome, method))
    return EXIT_NEGATIVE if outcome.kind == "no_solution" else EXIT_OK


def _subres_inputs(doc):
    if not isinstance(doc, dict):
        raise DocumentError("subres document must be a JSON object")
    if "points" in doc:
        problem = parse_problem(doc)
        return problem.field, problem.node_polynomial(), interp.hermite_interpolant(problem)
    if "field" not in doc or "f" not in doc or "g" not in doc:
        raise DocumentError("subres document needs 'field', 'f' and 'g' (or a problem document)")
    field = parse_field(doc["field"])
    f = parse_poly(doc["f"], field, "f")
    g = parse_poly(doc["g"], field, "g")
    if f.is_zero() or f.degree < 1 or not f.is_monic():
        raise DocumentError("f must be monic of degree at least 1")
    if g.degree > f.degree - 1:
        raise DocumentError(f"deg g = {g.degree} must be at most deg f - 1 = {f.degree - 1}")
    return field, f, g


def cmd_subres(args) -> int:
    field, f, g = _subres_inputs(loads(_read_input(args.input)))
    rows = _ENGINES[args.engine](f, g)
    if args.debug_matrices:
        for d in range(f.degree - 1):
            _debug(f"sylvester_body_d{d}", sylvester_body(f, g, d))
    _emit({
        "field": field_to_json(field),
        "engine": args.engine,
        "ell": f.degree - 1,
        "f": poly_to_json(f),
        "g": poly_to_json(g),
        "rows": [
            {"d": r.d, "sres": poly_to_json(r.sres), "cof_f": poly_to_json(r.cof_f),
             "cof_g": poly_to_json(r.cof_g)}
            for r in rows
        ],
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = loads(_read_input(args.input))
    problem = parse_problem(doc, args.convention)
    candidate = doc.get("candidate", {}) if isinstance(doc, dict) else {}
    num_arr = loads(args.numerator) if args.numerator is not None else candidate.get("numerator")
    den_arr = loads(args.denominator) if args.denominator is not None else candidate.get("denominator")
    if num_arr is None or den_arr is None:
        raise CliError("candidate needs a numerator and a denominator")
    num = parse_poly(num_arr, problem.field, "numerator")
    den = parse_poly(den_arr, problem.field, "denominator")
    if den.is_zero():
        raise CliError("candidate denominator is the zero polynomial")
    verdict = interp.verify_solution(problem, num, den)
    if verdict:
        _emit({"status": "pass"})
        return EXIT_OK
    _emit({"status": "fail", "condition": verdict.condition, "detail": verdict.detail})
    return EXIT_NEGATIVE


def _report_json(report) -> dict:
    return {
        "passed": report.passed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
    }


def cmd_crosscheck(args) -> int:
    engine = _ENGINES[args.engine]
    if args.seed is not None:
        fields = [FieldSpec.rational(), FieldSpec.prime(101)]
        batch = mixed_batch(args.seed, args.count, args.max_ell, fields, args.max_mult)
        instances = []
        for n, inst in enumerate(batch):
            report = cross_check(inst.problem, engine=engine)
            instances.append({
                "index": n,
                "kind": inst.kind,
                "field": field_to_json(inst.problem.field),
                "outcome": report.outcomes.get(interp.SUBRESULTANT).kind,
                "passed": report.passed,
                "failures": report.failures(),
            })
        passed = all(i["passed"] for i in instances)
        _emit({"seed": args.seed, "count": args.count, "passed": passed, "instances": instances})
    else:
        problem = parse_problem(loads(_read_input(args.input)), args.convention)
        report = cross_check(problem, engine=engine)
        passed = report.passed
        _emit(_report_json(report))
    return EXIT_OK if passed else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subresinterp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", help="JSON document path (default: stdin)")
        p.add_argument("--debug-matrices", action="store_true",
                       help="print intermediate matrices to stderr")

    p = sub.add_parser("solve", help="solve an interpolation problem")
    common(p)
    p.add_argument("--method", default="auto", choices=["auto", *interp.METHODS])
    p.add_argument("--engine", default="prs", choices=sorted(_ENGINES))
    p.add_argument("--convention", choices=["taylor", "derivative"],
                   help="override the document's data convention")
    p.set_defaults(run=cmd_solve)

    p = sub.add_parser("subres", help="dump the subresultant table of f and g")
    common(p)
    p.add_argument("--engine", default="prs", choices=sorted(_ENGINES))
    p.set_defaults(run=cmd_subres)

    p = sub.add_parser("verify", help="check a candidate numerator/denominator")
    common(p)
    p.add_argument("--numerator", help="JSON array of scalar strings")
    p.add_argument("--denominator", help="JSON array of scalar strings")
    p.add_argument("--convention", choices=["taylor", "derivative"])
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("crosscheck", help="run all solvers and check their identities")
    common(p)
    p.add_argument("--seed", type=int, help="generate a random batch instead of reading input")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--max-ell", type=int, default=6)
    p.add_argument("--max-mult", type=int, default=1)
    p.add_argument("--engine", default="prs", choices=sorted(_ENGINES))
    p.add_argument("--convention", choices=["taylor", "derivative"])
    p.set_defaults(run=cmd_crosscheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (CliError, DocumentError, ProblemError) as exc:
        _emit(error_to_json(str(exc)))
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
