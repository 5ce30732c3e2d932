"""Rational (Cauchy and osculatory) interpolation by three independent routes.

Data are Taylor coefficients: ``y[i][j]`` is the coefficient of
``(x - x_i)**j`` in the expansion of the target around ``x_i``. A problem
with budget ``(a, b)`` asks for ``A/B`` with ``deg A <= a``, ``deg B <= b``
matching ``a_i`` Taylor coefficients at every node ``x_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Sequence, Union

from .field import FieldElement, FieldSpec
from .linalg import (
    BorderedMatrix,
    Matrix,
    build_confluent_vandermonde,
    build_data_matrix,
    det_bordered,
    det_field,
    power_column,
    solve_linear,
)
from .poly import Polynomial, poly_divmod, poly_eval, poly_from_roots, poly_gcd_monic
from .subres import find_pivot_degree, subresultant_table

SUBRESULTANT = "subresultant"
SYLVESTER = "sylvester"
DETERMINANTAL = "determinantal"
METHODS = (SUBRESULTANT, SYLVESTER, DETERMINANTAL)


class ProblemError(ValueError):
    pass


@dataclass(frozen=True)
class InterpolationProblem:
    field: FieldSpec
    a: int
    b: int
    nodes: tuple[tuple[FieldElement, int], ...]
    data: tuple[tuple[FieldElement, ...], ...]

    def __post_init__(self):
        nodes = tuple((self.field(x), int(m)) for x, m in self.nodes)
        data = tuple(tuple(self.field(y) for y in ys) for ys in self.data)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "data", data)
        if self.a < 0 or self.b < 0:
            raise ProblemError("degree budgets must be nonnegative")
        if not nodes:
            raise ProblemError("at least one node is required")
        if len({x for x, _ in nodes}) != len(nodes):
            raise ProblemError("node values must be pairwise distinct")
        if len(data) != len(nodes):
            raise ProblemError("one data block per node is required")
        for (x, m), ys in zip(nodes, data):
            if m < 1:
                raise ProblemError(f"node {x}: multiplicity must be positive")
            if len(ys) != m:
                raise ProblemError(f"node {x}: multiplicity {m} but {len(ys)} values")
        total = sum(m for _, m in nodes)
        if total != self.a + self.b + 1:
            raise ProblemError(
                f"{total} conditions supplied but a + b + 1 = {self.a + self.b + 1}")

    @classmethod
    def cauchy(cls, field: FieldSpec, a: int, b: int, xs: Sequence, ys: Sequence) -> "InterpolationProblem":
        return cls(field, a, b, tuple((x, 1) for x in xs), tuple((y,) for y in ys))

    @property
    def ell(self) -> int:
        return self.a + self.b

    @property
    def is_cauchy(self) -> bool:
        return all(m == 1 for _, m in self.nodes)

    @property
    def all_zero(self) -> bool:
        return all(y.is_zero() for ys in self.data for y in ys)

    def node_polynomial(self) -> Polynomial:
        return poly_from_roots(list(self.nodes))


@dataclass(frozen=True)
class ZeroFunction:
    kind: str = dc_field(default="zero_function", init=False)


@dataclass(frozen=True)
class Solution:
    num: Polynomial
    den: Polynomial
    pivot_d: int
    method: str
    raw_num: Polynomial | None = None
    raw_den: Polynomial | None = None
    kind: str = dc_field(default="solution", init=False)


@dataclass(frozen=True)
class NoPivotDegree:
    def __str__(self):
        return "NoPivotDegree"


@dataclass(frozen=True)
class DenominatorVanishes:
    node: int

    def __str__(self):
        return "DenominatorVanishes"


@dataclass(frozen=True)
class NoSolution:
    witness: Union[NoPivotDegree, DenominatorVanishes]
    pivot_d: int | None = None
    method: str | None = None
    kind: str = dc_field(default="no_solution", init=False)


SolveOutcome = Union[ZeroFunction, Solution, NoSolution]


@dataclass(frozen=True)
class PivotPair:
    """The uncanonicalized numerator/denominator a route produces at its pivot."""

    d: int
    num: Polynomial
    den: Polynomial


def hermite_interpolant(p: InterpolationProblem) -> Polynomial:
    """The unique ``g`` of degree ``<= l`` with the given Taylor data."""
    v = build_confluent_vandermonde(list(p.nodes), p.ell)
    vt = Matrix.from_rows(p.field, [[v[k, c] for k in range(v.rows)] for c in range(v.cols)])
    rhs = [y for ys in p.data for y in ys]
    return Polynomial(p.field, solve_linear(vt, rhs))


def hermite_determinantal(p: InterpolationProblem) -> Polynomial:
    """``g`` as minus a bordered determinant over ``det V``."""
    nodes = list(p.nodes)
    v = build_confluent_vandermonde(nodes, p.ell)
    y_row = build_data_matrix(nodes, list(p.data), 0)
    border = power_column(p.field, p.ell) + [Polynomial.zero(p.field)]
    top = -det_bordered(BorderedMatrix(v.stack(y_row), border))
    return top.scale(det_field(v).inverse())


def normalize_canonical(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Coprime pair with monic numerator; ``(0, 1)`` for the zero function."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return num, Polynomial.constant(den.field, 1)
    h = poly_gcd_monic(num, den)
    if h.degree > 0:
        num = poly_divmod(num, h)[0]
        den = poly_divmod(den, h)[0]
    inv = num.leading().inverse()
    return num.scale(inv), den.scale(inv)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    condition: str | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok


def verify_solution(p: InterpolationProblem, num: Polynomial, den: Polynomial) -> Verdict:
    """Check budgets, nonvanishing denominator and ``f | (num - g den)``."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.degree > p.a:
        return Verdict(False, "numerator_degree", f"deg {num.degree} > a = {p.a}")
    if den.degree > p.b:
        return Verdict(False, "denominator_degree", f"deg {den.degree} > b = {p.b}")
    for i, (x, _) in enumerate(p.nodes):
        if poly_eval(den, x).is_zero():
            return Verdict(False, "denominator_vanishes", f"denominator is zero at node {i} (x = {x})")
    g = hermite_interpolant(p)
    rem = poly_divmod(num - g * den, p.node_polynomial())[1]
    if not rem.is_zero():
        return Verdict(False, "divisibility", "node polynomial does not divide num - g*den")
    return Verdict(True)


def _classify(p: InterpolationProblem, pair: PivotPair | None, method: str) -> SolveOutcome:
    if pair is None:
        return NoSolution(NoPivotDegree(), None, method)
    for i, (x, _) in enumerate(p.nodes):
        if poly_eval(pair.den, x).is_zero():
            return NoSolution(DenominatorVanishes(i), pair.d, method)
    num, den = normalize_canonical(pair.num, pair.den)
    return Solution(num, den, pair.d, method, pair.num, pair.den)


def subresultant_pair(p: InterpolationProblem, engine: str = "prs", table=None) -> PivotPair | None:
    if table is None:
        table = subresultant_table(p.node_polynomial(), hermite_interpolant(p), engine)
    d = find_pivot_degree(table, p.a)
    if d is None:
        return None
    return PivotPair(d, table[d].sres, table[d].cof_g)


def solve_subresultant(p: InterpolationProblem, engine: str = "prs") -> SolveOutcome:
    if p.all_zero:
        return ZeroFunction()
    return _classify(p, subresultant_pair(p, engine), SUBRESULTANT)


def _resultant_set(field: FieldSpec, us: Sequence[FieldElement], vs: Sequence[FieldElement]) -> FieldElement:
    acc = field.one()
    for u in us:
        for v in vs:
            acc = acc * (u - v)
    return acc


def _linear_product(field: FieldSpec, roots: Sequence[FieldElement], sign: int) -> Polynomial:
    # prod (x - v) for sign=+1, prod (v - x) for sign=-1
    out = Polynomial.constant(field, 1)
    for v in roots:
        out = out * Polynomial(field, [-v, 1] if sign > 0 else [v, -1])
    return out


def sylvester_numerator(p: InterpolationProblem, d: int) -> Polynomial:
    """Sum over ``d``-subsets ``S`` of ``R(x, S) prod_{j not in S} y_j / R(X - S, S)``."""
    xs = [x for x, _ in p.nodes]
    ys = [ys[0] for ys in p.data]
    field = p.field
    acc = Polynomial.zero(field)
    for subset in combinations(range(len(xs)), d):
        chosen = set(subset)
        inside = [xs[j] for j in subset]
        outside = [xs[j] for j in range(len(xs)) if j not in chosen]
        weight = field.one()
        for j in range(len(xs)):
            if j not in chosen:
                weight = weight * ys[j]
        if weight.is_zero():
            continue
        weight = weight / _resultant_set(field, outside, inside)
        acc = acc + _linear_product(field, inside, +1).scale(weight)
    return acc


def sylvester_denominator(p: InterpolationProblem, d: int) -> Polynomial:
    """Sum over ``(l-d)``-subsets ``S`` of ``R(S, x) prod_{j in S} y_j / R(S, X - S)``."""
    xs = [x for x, _ in p.nodes]
    ys = [ys[0] for ys in p.data]
    field = p.field
    acc = Polynomial.zero(field)
    for subset in combinations(range(len(xs)), p.ell - d):
        chosen = set(subset)
        inside = [xs[j] for j in subset]
        outside = [xs[j] for j in range(len(xs)) if j not in chosen]
        weight = field.one()
        for j in subset:
            weight = weight * ys[j]
        if weight.is_zero():
            continue
        weight = weight / _resultant_set(field, inside, outside)
        acc = acc + _linear_product(field, inside, -1).scale(weight)
    return acc


def sylvester_pair(p: InterpolationProblem) -> PivotPair | None:
    if not p.is_cauchy:
        raise ProblemError("Sylvester sums need every multiplicity equal to 1")
    for d in range(p.a, -1, -1):
        num = sylvester_numerator(p, d)
        if not num.is_zero():
            return PivotPair(d, num, sylvester_denominator(p, d))
    return None


def solve_sylvester(p: InterpolationProblem) -> SolveOutcome:
    if not p.is_cauchy:
        raise ProblemError("Sylvester sums need every multiplicity equal to 1")
    if p.all_zero:
        return ZeroFunction()
    return _classify(p, sylvester_pair(p), SYLVESTER)


def determinantal_blocks(p: InterpolationProblem, d: int) -> Matrix:
    """``V_{d+1}`` stacked over ``U_{l-d+1}``: the common body of both determinants."""
    nodes = list(p.nodes)
    v = build_confluent_vandermonde(nodes, d)
    u = build_data_matrix(nodes, list(p.data), p.ell - d)
    return v.stack(u)


def determinantal_numerator(p: InterpolationProblem, d: int, body: Matrix | None = None) -> Polynomial:
    body = determinantal_blocks(p, d) if body is None else body
    zero = Polynomial.zero(p.field)
    border = power_column(p.field, d) + [zero] * (p.ell - d + 1)
    return -det_bordered(BorderedMatrix(body, border))


def determinantal_denominator(p: InterpolationProblem, d: int, body: Matrix | None = None) -> Polynomial:
    body = determinantal_blocks(p, d) if body is None else body
    zero = Polynomial.zero(p.field)
    border = [zero] * (d + 1) + power_column(p.field, p.ell - d)
    return det_bordered(BorderedMatrix(body, border))


def determinantal_pair(p: InterpolationProblem) -> PivotPair | None:
    for d in range(p.a, -1, -1):
        body = determinantal_blocks(p, d)
        num = determinantal_numerator(p, d, body)
        if not num.is_zero():
            return PivotPair(d, num, determinantal_denominator(p, d, body))
    return None


def solve_determinantal(p: InterpolationProblem) -> SolveOutcome:
    if p.all_zero:
        return ZeroFunction()
    return _classify(p, determinantal_pair(p), DETERMINANTAL)


def solve(p: InterpolationProblem, method: str = "auto", engine: str = "prs") -> SolveOutcome:
    """Dispatch; ``auto`` is the subresultant route."""
    if method in ("auto", SUBRESULTANT):
        return solve_subresultant(p, engine)
    if method == SYLVESTER:
        return solve_sylvester(p)
    if method == DETERMINANTAL:
        return solve_determinantal(p)
    raise ValueError(f"unknown method {method!r}")


def vandermonde_determinant(p: InterpolationProblem) -> FieldElement:
    return det_field(build_confluent_vandermonde(list(p.nodes), p.ell))
