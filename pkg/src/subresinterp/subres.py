"""Subresultants of ``f`` (monic, degree l+1) and ``g`` (formal degree l).

Two independent engines produce the full table ``Sres_d, F_d, G_d`` for
``d = 0..l``:

* ``sres_det`` evaluates the Sylvester-type determinants directly,
* ``sres_prs`` runs a subresultant remainder sequence with cofactor
  propagation, which is much cheaper.

Both store identically-zero rows as ``(0, 0, 0)``; the only exception is
``d = l`` whose row is ``(g, 0, 1)`` by definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import Matrix, border_cofactors, combine_border
from .poly import Polynomial, poly_divmod


@dataclass(frozen=True)
class SubresultantRow:
    d: int
    sres: Polynomial
    cof_f: Polynomial
    cof_g: Polynomial

    def is_zero(self) -> bool:
        return self.sres.is_zero()


@dataclass(frozen=True)
class EuclideanRow:
    r: Polynomial
    s: Polynomial
    t: Polynomial


def _shape(f: Polynomial, g: Polynomial) -> int:
    if f.field != g.field:
        raise ValueError("f and g live in different fields")
    if f.is_zero() or not f.is_monic() or f.degree < 1:
        raise ValueError("f must be monic of degree at least 1")
    ell = f.degree - 1
    if g.degree > ell:
        raise ValueError(f"deg g = {g.degree} exceeds formal degree {ell}")
    return ell


def _zero_row(field, d: int) -> SubresultantRow:
    z = Polynomial.zero(field)
    return SubresultantRow(d, z, z, z)


def sylvester_body(f: Polynomial, g: Polynomial, d: int) -> Matrix:
    """The ``(2l+1-2d) x (2l-2d)`` numeric part of the subresultant matrices.

    Columns run over powers ``2l-d`` down to ``d+1``; ``g`` is padded to
    formal degree ``l``.
    """
    ell = _shape(f, g)
    field = f.field
    fc = f.padded(ell + 2)
    gc = g.padded(ell + 1)
    powers = range(2 * ell - d, d, -1)
    rows = []
    for s in range(ell - d - 1, -1, -1):
        rows.append([fc[p - s] if 0 <= p - s <= ell + 1 else field.zero() for p in powers])
    for s in range(ell - d, -1, -1):
        rows.append([gc[p - s] if 0 <= p - s <= ell else field.zero() for p in powers])
    return Matrix.from_rows(field, rows, 2 * ell - 2 * d)


def sres_det(f: Polynomial, g: Polynomial, d: int, raw_cofactors: bool = False) -> SubresultantRow:
    """One row of the table straight from the determinant definitions.

    With ``raw_cofactors`` the cofactor determinants are returned even when
    ``Sres_d`` vanishes (they are not meaningful there).
    """
    ell = _shape(f, g)
    if not 0 <= d <= ell:
        raise ValueError(f"index d={d} outside 0..{ell}")
    field = f.field
    zero = Polynomial.zero(field)
    if d == ell:
        return SubresultantRow(d, g, zero, Polynomial.constant(field, 1))
    cof = border_cofactors(sylvester_body(f, g, d))
    nf = ell - d
    f_border = [Polynomial.monomial(field, s) for s in range(nf - 1, -1, -1)]
    g_border = [Polynomial.monomial(field, s) for s in range(nf, -1, -1)]
    cof_f = combine_border(field, cof[:nf], f_border)
    cof_g = combine_border(field, cof[nf:], g_border)
    sres = cof_f * f + cof_g * g
    if sres.is_zero() and not raw_cofactors:
        return _zero_row(field, d)
    return SubresultantRow(d, sres, cof_f, cof_g)


def sres_det_table(f: Polynomial, g: Polynomial) -> list[SubresultantRow]:
    ell = _shape(f, g)
    return [sres_det(f, g, d) for d in range(ell + 1)]


def _sign_reversal(n: int) -> int:
    # sign of reversing n rows
    return -1 if (n * (n - 1) // 2) % 2 else 1


def sres_prs(f: Polynomial, g: Polynomial) -> list[SubresultantRow]:
    """Full table via the signed subresultant remainder sequence.

    The recurrence works with signed subresultants (``g``-rows in reverse
    order); row ``d`` is converted back by the sign of reversing its
    ``l+1-d`` ``g``-rows.
    """
    ell = _shape(f, g)
    field = f.field
    p = ell + 1
    one = Polynomial.constant(field, 1)
    zero = Polynomial.zero(field)

    # P[j] = U[j] f + V[j] g; s[j] = coefficient of x^j in P[j]; t[j] = lc(P[j])
    P = {p: f, p - 1: g}
    U = {p: one, p - 1: zero}
    V = {p: zero, p - 1: one}
    s = {p: field.one()}
    t = {p: field.one()}
    if not g.is_zero():
        t[p - 1] = g.leading()

    i, j = p + 1, p
    while not P[j - 1].is_zero():
        k = P[j - 1].degree
        if k == j - 1:
            s[j - 1] = t[j - 1]
            c = s[j - 1] * s[j - 1]
        else:
            s[j - 1] = field.zero()
            for delta in range(1, j - k):
                t[j - delta - 1] = (t[j - 1] * t[j - delta]) / s[j]
                if delta % 2:
                    t[j - delta - 1] = -t[j - delta - 1]
            s[k] = t[k]
            for l in range(j - 2, k, -1):
                P[l] = U[l] = V[l] = zero
                s[l] = field.zero()
            scale = s[k] / t[j - 1]
            P[k] = P[j - 1].scale(scale)
            U[k] = U[j - 1].scale(scale)
            V[k] = V[j - 1].scale(scale)
            c = t[j - 1] * s[k]
        if k == 0:
            i, j = j, k
            break
        quo, rem = poly_divmod(P[i - 1].scale(c), P[j - 1])
        denom = -(s[j] * t[i - 1]).inverse()
        P[k - 1] = rem.scale(denom)
        U[k - 1] = (U[i - 1].scale(c) - quo * U[j - 1]).scale(denom)
        V[k - 1] = (V[i - 1].scale(c) - quo * V[j - 1]).scale(denom)
        if not P[k - 1].is_zero():
            t[k - 1] = P[k - 1].leading()
        i, j = j, k

    rows = []
    for d in range(ell + 1):
        if d == ell:
            rows.append(SubresultantRow(d, g, zero, one))
            continue
        pd = P.get(d)
        if pd is None or pd.is_zero():
            rows.append(_zero_row(field, d))
            continue
        sign = _sign_reversal(p - d)
        rows.append(SubresultantRow(d, pd.scale(sign), U[d].scale(sign), V[d].scale(sign)))
    return rows


def subresultant_table(f: Polynomial, g: Polynomial, engine: str = "prs") -> list[SubresultantRow]:
    if engine == "prs":
        return sres_prs(f, g)
    if engine == "det":
        return sres_det_table(f, g)
    raise ValueError(f"unknown engine {engine!r}")


def extended_euclid(f: Polynomial, g: Polynomial) -> list[EuclideanRow]:
    """Rows ``r_i = s_i f + t_i g`` down to (and including) the zero remainder."""
    if f.is_zero():
        raise ValueError("extended Euclid needs f != 0")
    field = f.field
    one = Polynomial.constant(field, 1)
    zero = Polynomial.zero(field)
    rows = [EuclideanRow(f, one, zero), EuclideanRow(g, zero, one)]
    while not rows[-1].r.is_zero():
        prev, cur = rows[-2], rows[-1]
        q, r = poly_divmod(prev.r, cur.r)
        rows.append(EuclideanRow(r, prev.s - q * cur.s, prev.t - q * cur.t))
    return rows


def find_pivot_degree(rows: Sequence[SubresultantRow], a: int) -> int | None:
    """Largest ``d <= a`` with ``Sres_d != 0``, or ``None``."""
    for d in range(min(a, len(rows) - 1), -1, -1):
        if not rows[d].sres.is_zero():
            return d
    return None


def find_pivot_degree_minimal(rows: Sequence[SubresultantRow], a: int) -> int | None:
    """Smallest ``d >= a`` with ``Sres_d != 0``, or ``None``."""
    for d in range(a, len(rows)):
        if not rows[d].sres.is_zero():
            return d
    return None
