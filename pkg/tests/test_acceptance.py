"""Exit criteria. Every comparison is exact; run with ``pytest -v`` for the summary lines."""

import random

import pytest

from subresinterp.documents import parse_problem
from subresinterp.generate import SOLVABLE, mixed_batch, planted_instance, random_pair
from subresinterp.interp import (
    InterpolationProblem,
    NoPivotDegree,
    NoSolution,
    Solution,
    determinantal_pair,
    hermite_determinantal,
    hermite_interpolant,
    normalize_canonical,
    solve_determinantal,
    solve_subresultant,
    solve_sylvester,
    subresultant_pair,
    sylvester_pair,
    verify_solution,
)
from subresinterp.linalg import build_confluent_vandermonde, build_data_matrix, build_wronskian, det_field
from subresinterp.poly import Polynomial
from subresinterp.subres import find_pivot_degree, sres_det, sres_det_table, sres_prs

from conftest import GF7, GF13, GF101, QQ, poly, sixth_roots_problem
from oracles import brute_force_solution, confluent_det_formula, lagrange, laplace_det, taylor_match

acceptance = pytest.mark.acceptance


def _signature(out):
    if isinstance(out, Solution):
        return (out.kind, out.pivot_d, out.num, out.den)
    if isinstance(out, NoSolution):
        return (out.kind, out.pivot_d, str(out.witness))
    return (out.kind,)


@acceptance(1, "sixth-roots example over GF(7) and GF(13)")
@pytest.mark.parametrize("field, xs", [(GF7, range(1, 7)), (GF13, (1, 3, 4, 9, 10, 12))], ids=str)
def test_sixth_roots_example(field, xs):
    p = sixth_roots_problem(field, xs)
    f, g = p.node_polynomial(), hermite_interpolant(p)
    assert f == poly(field, -1, 0, 0, 0, 0, 0, 1)
    assert g == poly(field, 2, 0, 0, 0, 0, 1)
    zero = Polynomial.zero(field)
    for table in (sres_prs(f, g), sres_det_table(f, g)):
        assert table[3].sres == zero and table[2].sres == zero
        assert table[1].sres == poly(field, 8, 16)
        assert table[1].cof_f == poly(field, -8)
        assert table[1].cof_g == poly(field, 0, 8)
        assert find_pivot_degree(table, 3) == 1
    reduced = normalize_canonical(poly(field, 1, 2), poly(field, 0, 1))
    for solver in (solve_subresultant, solve_sylvester, solve_determinantal):
        out = solver(p)
        assert isinstance(out, Solution)
        assert out.pivot_d == 1
        assert (out.num, out.den) == reduced
        assert verify_solution(p, out.num, out.den)


@acceptance(2, "osculatory example over Q, derivative-convention input")
def test_osculatory_example():
    doc = {
        "field": {"kind": "rational"},
        "num_degree": 2,
        "den_degree": 2,
        "convention": "derivative",
        "points": [{"x": "1", "values": ["2", "3"]}, {"x": "2", "values": ["6", "7", "8"]}],
    }
    p = parse_problem(doc)
    f, g = p.node_polynomial(), hermite_interpolant(p)
    assert g == poly(QQ, -8, 23, -20, 8, -1)
    for row in (sres_det(f, g, 2), sres_prs(f, g)[2]):
        assert row.sres == poly(QQ, 0, 35, -25)
        assert row.cof_f == poly(QQ, -25, 5)
        assert row.cof_g == poly(QQ, 25, -25, 5)
    reduced = normalize_canonical(poly(QQ, 0, 7, -5), poly(QQ, 5, -5, 1))
    for solver in (solve_subresultant, solve_determinantal):
        out = solver(p)
        assert out.pivot_d == 2
        assert (out.num, out.den) == reduced
    assert verify_solution(p, poly(QQ, 0, 7, -5), poly(QQ, 5, -5, 1))
    assert taylor_match(p, poly(QQ, 0, 7, -5), poly(QQ, 5, -5, 1))


@acceptance(3, "data forcing a zero numerator has no solution")
def test_unsolvable_forced_zero_numerator():
    p = InterpolationProblem.cauchy(QQ, 2, 1, [0, 1, 2, 3], [0, 0, 0, 1])
    for solver in (solve_subresultant, solve_sylvester, solve_determinantal):
        out = solver(p)
        assert isinstance(out, NoSolution)
        assert isinstance(out.witness, NoPivotDegree)
    assert brute_force_solution(p) is None


@acceptance(4, "determinant and PRS subresultants agree, Bezout identity holds")
@pytest.mark.parametrize("field", [QQ, GF101], ids=str)
def test_det_vs_prs(field):
    rng = random.Random(4000 + (field.modulus or 0))
    for _ in range(300):
        f, g = random_pair(field, rng, 8)
        det_rows, prs_rows = sres_det_table(f, g), sres_prs(f, g)
        assert len(det_rows) == f.degree
        assert det_rows == prs_rows
        for row in prs_rows:
            assert row.sres == row.cof_f * f + row.cof_g * g


@acceptance(5, "three-way solver agreement on multiplicity-free instances")
def test_three_way_agreement():
    batch = mixed_batch(5000, 200, 7, [QQ, GF101], max_mult=1)
    kinds = set()
    for inst in batch:
        p = inst.problem
        outs = [solve_subresultant(p), solve_sylvester(p), solve_determinantal(p)]
        sigs = {_signature(o) for o in outs}
        assert len(sigs) == 1, sigs
        kinds.add(outs[0].kind)
        sub = subresultant_pair(p)
        if sub is None:
            assert sylvester_pair(p) is None and determinantal_pair(p) is None
            continue
        sylv, det = sylvester_pair(p), determinantal_pair(p)
        assert sylv.num == sub.num and sylv.den == sub.den
        sign = -1 if (p.ell - sub.d) % 2 else 1
        scale = confluent_det_formula(list(p.nodes), p.field) * sign
        assert det.num == sub.num.scale(scale)
        assert det.den == sub.den.scale(scale)
        if isinstance(outs[0], Solution):
            assert verify_solution(p, outs[0].num, outs[0].den)
    assert kinds == {"solution", "no_solution"}


@acceptance(6, "planted reduced fractions are recovered exactly")
@pytest.mark.parametrize("field", [QQ, GF101], ids=str)
def test_round_trip(field):
    rng = random.Random(6000 + (field.modulus or 0))
    for _ in range(200):
        inst = planted_instance(field, rng, 8, max_mult=4)
        assert inst.kind == SOLVABLE
        out = solve_subresultant(inst.problem)
        assert isinstance(out, Solution)
        assert (out.num, out.den) == inst.planted
        assert verify_solution(inst.problem, out.num, out.den)
        assert taylor_match(inst.problem, out.num, out.den)


@acceptance(7, "polynomial specializations: b=0 and the a=l determinantal formula")
@pytest.mark.parametrize("field", [QQ, GF101], ids=str)
def test_specializations(field):
    rng = random.Random(7000 + (field.modulus or 0))
    for n in range(50):
        cauchy = n % 2 == 0
        inst = planted_instance(field, rng, 7, max_mult=1 if cauchy else 4)
        base = inst.problem
        p = InterpolationProblem(field, base.ell, 0, base.nodes, base.data)
        g = hermite_interpolant(p)
        # the Taylor-coefficient oracle pins g down among polynomials of degree <= l
        assert g.degree <= p.ell and taylor_match(p, g, Polynomial.constant(field, 1))
        if cauchy:
            assert g == lagrange([x for x, _ in p.nodes], [ys[0] for ys in p.data], field)
            out = solve_sylvester(p)
            assert (out.num, out.den) == normalize_canonical(g, Polynomial.constant(field, 1))
        assert (solve_subresultant(p).num, solve_subresultant(p).den) == normalize_canonical(
            g, Polynomial.constant(field, 1))
        pair = determinantal_pair(p)
        assert pair.d == p.ell and pair.den.degree == 0
        assert pair.num.scale(pair.den.leading().inverse()) == g
        assert hermite_determinantal(p) == g


@acceptance(8, "confluent Vandermonde determinant and Wronskian identity")
def test_structured_identities():
    rng = random.Random(8000)
    for _ in range(50):
        inst = planted_instance(QQ, rng, 7, max_mult=4)
        p = inst.problem
        nodes = list(p.nodes)
        v = build_confluent_vandermonde(nodes, p.ell)
        formula = confluent_det_formula(nodes, QQ)
        assert laplace_det(v.to_rows(), QQ) == formula
        assert det_field(v) == formula
        g = hermite_interpolant(p)
        for r in range(1, p.ell + 3):
            assert build_wronskian(nodes, g, r) == build_data_matrix(nodes, list(p.data), r - 1)
