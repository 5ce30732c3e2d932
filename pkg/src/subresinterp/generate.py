"""Seeded random interpolation instances with known answers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .field import FieldElement, FieldSpec
from .interp import InterpolationProblem, normalize_canonical
from .poly import Polynomial, poly_eval, taylor_coefficients

SOLVABLE = "solvable"
NO_PIVOT = "no_pivot"
DENOMINATOR_VANISHES = "denominator_vanishes"
RANDOM_DATA = "random_data"


@dataclass(frozen=True)
class Instance:
    problem: InterpolationProblem
    kind: str
    planted: tuple[Polynomial, Polynomial] | None = None  # canonical pair when solvable


def random_scalar(field: FieldSpec, rng: random.Random, bound: int = 9) -> FieldElement:
    if field.kind == "prime":
        return field(rng.randrange(field.modulus))
    if rng.random() < 0.2:
        return field(Fraction(rng.randint(-bound, bound), rng.randint(1, 4)))
    return field(rng.randint(-bound, bound))


def random_poly(field: FieldSpec, rng: random.Random, max_degree: int, nonzero: bool = True) -> Polynomial:
    while True:
        p = Polynomial(field, [random_scalar(field, rng) for _ in range(max_degree + 1)])
        if not nonzero or not p.is_zero():
            return p


def random_nodes(field: FieldSpec, rng: random.Random, multiplicities: list[int]) -> list[tuple[FieldElement, int]]:
    if field.kind == "prime" and field.modulus < len(multiplicities):
        raise ValueError(f"{field} has fewer than {len(multiplicities)} elements")
    pool = range(field.modulus) if field.kind == "prime" else range(-12, 13)
    values = rng.sample(list(pool), len(multiplicities))
    return [(field(v), m) for v, m in zip(values, multiplicities)]


def random_multiplicities(rng: random.Random, total: int, max_mult: int) -> list[int]:
    out = []
    while total:
        m = rng.randint(1, min(max_mult, total))
        out.append(m)
        total -= m
    rng.shuffle(out)
    return out


def taylor_of_quotient(num: Polynomial, den: Polynomial, x, count: int) -> list[FieldElement]:
    """First ``count`` Taylor coefficients of ``num/den`` at ``x`` (``den(x) != 0``)."""
    a = taylor_coefficients(num, x, count)
    b = taylor_coefficients(den, x, count)
    inv_b0 = b[0].inverse()
    q = []
    for n in range(count):
        acc = a[n]
        for k in range(1, n + 1):
            acc = acc - b[k] * q[n - k]
        q.append(acc * inv_b0)
    return q


def _budget(rng: random.Random, max_ell: int, min_a: int = 0, min_b: int = 0) -> tuple[int, int]:
    ell = rng.randint(min_a + min_b, max(max_ell, min_a + min_b))
    a = rng.randint(min_a, ell - min_b)
    return a, ell - a


def _nonvanishing(field, rng, max_degree, nodes):
    while True:
        den = random_poly(field, rng, max_degree)
        if all(not poly_eval(den, x).is_zero() for x, _ in nodes):
            return den


def planted_instance(field, rng, max_ell, max_mult=1) -> Instance:
    a, b = _budget(rng, max_ell)
    nodes = random_nodes(field, rng, random_multiplicities(rng, a + b + 1, max_mult))
    num = random_poly(field, rng, a)
    den = _nonvanishing(field, rng, b, nodes)
    data = [taylor_of_quotient(num, den, x, m) for x, m in nodes]
    problem = InterpolationProblem(field, a, b, tuple(nodes), tuple(map(tuple, data)))
    return Instance(problem, SOLVABLE, normalize_canonical(num, den))


def no_pivot_instance(field, rng, max_ell, max_mult=1) -> Instance:
    """Data vanish on nodes carrying more than ``a`` conditions, but not everywhere."""
    a, b = _budget(rng, max_ell, min_b=1)
    while True:
        mults = random_multiplicities(rng, a + b + 1, max_mult)
        zero_nodes, weight = 0, 0
        while weight <= a:
            weight += mults[zero_nodes]
            zero_nodes += 1
        if zero_nodes < len(mults):
            break
    nodes = random_nodes(field, rng, mults)
    data = []
    for i, (_, m) in enumerate(nodes):
        if i < zero_nodes:
            data.append([field.zero()] * m)
        else:
            data.append([random_scalar(field, rng) for _ in range(m)])
    if all(y.is_zero() for ys in data[zero_nodes:] for y in ys):
        data[-1][0] = field.one()
    problem = InterpolationProblem(field, a, b, tuple(nodes), tuple(map(tuple, data)))
    return Instance(problem, NO_PIVOT)


def vanishing_denominator_instance(field, rng, max_ell, max_mult=1) -> Instance:
    """Data of ``A/B`` with the top coefficient at node 0 perturbed.

    ``(x - x_0) A / ((x - x_0) B)`` then satisfies the linearized conditions,
    while no reduced pair of the right degrees can match the data.
    """
    a, b = _budget(rng, max_ell, min_a=1, min_b=1)
    nodes = random_nodes(field, rng, random_multiplicities(rng, a + b + 1, max_mult))
    num = random_poly(field, rng, a - 1)
    den = _nonvanishing(field, rng, b - 1, nodes)
    data = [taylor_of_quotient(num, den, x, m) for x, m in nodes]
    bump = random_scalar(field, rng)
    while bump.is_zero():
        bump = random_scalar(field, rng)
    data[0][-1] = data[0][-1] + bump
    problem = InterpolationProblem(field, a, b, tuple(nodes), tuple(map(tuple, data)))
    return Instance(problem, DENOMINATOR_VANISHES)


def random_data_instance(field, rng, max_ell, max_mult=1) -> Instance:
    a, b = _budget(rng, max_ell)
    nodes = random_nodes(field, rng, random_multiplicities(rng, a + b + 1, max_mult))
    data = [[random_scalar(field, rng) for _ in range(m)] for _, m in nodes]
    problem = InterpolationProblem(field, a, b, tuple(nodes), tuple(map(tuple, data)))
    return Instance(problem, RANDOM_DATA)


_MAKERS = {
    SOLVABLE: planted_instance,
    NO_PIVOT: no_pivot_instance,
    DENOMINATOR_VANISHES: vanishing_denominator_instance,
    RANDOM_DATA: random_data_instance,
}
_MIX = [SOLVABLE] * 5 + [NO_PIVOT, DENOMINATOR_VANISHES, DENOMINATOR_VANISHES, RANDOM_DATA]


def mixed_batch(seed: int, count: int, max_ell: int, fields: list[FieldSpec], max_mult: int = 1) -> list[Instance]:
    """Deterministic mix of solvable and unsolvable instances."""
    rng = random.Random(seed)
    out = []
    for n in range(count):
        field = fields[n % len(fields)]
        out.append(_MAKERS[rng.choice(_MIX)](field, rng, max_ell, max_mult))
    return out


def random_pair(field: FieldSpec, rng: random.Random, max_ell: int, max_mult: int = 3) -> tuple[Polynomial, Polynomial]:
    """``f`` from random distinct roots with multiplicities, ``g`` random of degree ``<= l``."""
    ell = rng.randint(0, max_ell)
    nodes = random_nodes(field, rng, random_multiplicities(rng, ell + 1, max_mult))
    f = Polynomial(field, [1])
    for x, m in nodes:
        f = f * Polynomial(field, [-x, 1]) ** m
    choice = rng.random()
    if choice < 0.15:
        g = random_poly(field, rng, rng.randint(0, ell), nonzero=False)
    elif choice < 0.35 and ell > 0:
        # planted common factor with f
        x, m = nodes[0]
        h = Polynomial(field, [-x, 1]) ** rng.randint(1, min(m, ell))
        g = h * random_poly(field, rng, ell - h.degree)
    else:
        g = random_poly(field, rng, ell, nonzero=False)
    return f, g
