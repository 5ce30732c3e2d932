"""Run every solver on one problem and check the identities tying them together."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import interp
from .interp import InterpolationProblem, Solution
from .subres import SubresultantRow, sres_det_table, sres_prs

Engine = Callable[..., list[SubresultantRow]]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CrossCheckReport:
    checks: list[Check] = field(default_factory=list)
    outcomes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append(Check(name, bool(passed), detail))


def _signature(outcome) -> tuple:
    if isinstance(outcome, Solution):
        return ("solution", outcome.pivot_d, outcome.num, outcome.den)
    if isinstance(outcome, interp.NoSolution):
        return ("no_solution", outcome.pivot_d, str(outcome.witness))
    return ("zero_function",)


def cross_check(p: InterpolationProblem, engine: Engine = sres_prs, oracle_engine: Engine = sres_det_table) -> CrossCheckReport:
    """``engine`` feeds the subresultant solver; ``oracle_engine`` is the reference table."""
    report = CrossCheckReport()
    if p.all_zero:
        report.outcomes = {m: interp.ZeroFunction() for m in interp.METHODS}
        report.add("outcome_kind", True, "zero data")
        return report

    f = p.node_polynomial()
    g = interp.hermite_interpolant(p)
    table = engine(f, g)
    reference = oracle_engine(f, g)
    report.add("engine_agreement", table == reference,
               "" if table == reference else
               "rows differ at d=" + ",".join(str(a.d) for a, b in zip(table, reference) if a != b))
    report.add("bezout_identity",
               all(r.sres == r.cof_f * f + r.cof_g * g for r in table))

    sub_pair = interp.subresultant_pair(p, table=table)
    det_pair = interp.determinantal_pair(p)
    outcomes = {
        interp.SUBRESULTANT: interp._classify(p, sub_pair, interp.SUBRESULTANT),
        interp.DETERMINANTAL: interp._classify(p, det_pair, interp.DETERMINANTAL),
    }
    sylv_pair = None
    if p.is_cauchy:
        sylv_pair = interp.sylvester_pair(p)
        outcomes[interp.SYLVESTER] = interp._classify(p, sylv_pair, interp.SYLVESTER)
    report.outcomes = outcomes

    sigs = {m: _signature(o) for m, o in outcomes.items()}
    kinds = {s[0] for s in sigs.values()}
    report.add("outcome_kind", len(kinds) == 1, repr(sorted(kinds)))
    pivots = {s[1] for s in sigs.values() if len(s) > 1}
    report.add("pivot_degree", len(pivots) <= 1, repr(sorted(pivots, key=repr)))
    report.add("canonical_solution", len(set(sigs.values())) == 1)

    if sub_pair is not None:
        d = sub_pair.d
        sign = -1 if (p.ell - d) % 2 else 1
        scale = interp.vandermonde_determinant(p) * sign
        ok_num = det_pair is not None and det_pair.num == sub_pair.num.scale(scale)
        ok_den = det_pair is not None and det_pair.den == sub_pair.den.scale(scale)
        report.add("determinantal_scaling_numerator", ok_num)
        report.add("determinantal_scaling_denominator", ok_den)
        if p.is_cauchy:
            report.add("sylvester_numerator_equals_sres",
                       sylv_pair is not None and sylv_pair.num == sub_pair.num)
            report.add("sylvester_denominator_equals_cofactor",
                       sylv_pair is not None and sylv_pair.den == sub_pair.den)
    else:
        report.add("determinantal_scaling_numerator", det_pair is None, "no pivot")
        if p.is_cauchy:
            report.add("sylvester_numerator_equals_sres", sylv_pair is None, "no pivot")

    sol = outcomes[interp.SUBRESULTANT]
    if isinstance(sol, Solution):
        verdict = interp.verify_solution(p, sol.num, sol.den)
        report.add("solution_verifies", verdict.ok, verdict.condition or "")
    return report
