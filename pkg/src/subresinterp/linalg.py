"""Exact dense matrices and the structured matrices built from interpolation data.

Determinants are computed by elimination on the raw values: Bareiss over the
integers for rationals (rows are cleared of denominators first), plain
Gaussian elimination for residues. Results are identical to textbook
elimination in the field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .field import PRIME, FieldElement, FieldSpec, binomial, small_factorial
from .poly import Polynomial, poly_formal_derivative, poly_eval


class Matrix:
    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: FieldSpec, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ValueError(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = tuple(field(e) for e in entries)

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(field, len(rows), cols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        return cls(field, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[FieldElement, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[FieldElement]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def stack(self, other: "Matrix") -> "Matrix":
        """Vertical block concatenation (``self`` on top)."""
        if other.cols != self.cols:
            raise ValueError(f"cannot stack {self.cols} and {other.cols} columns")
        return Matrix(self.field, self.rows + other.rows, self.cols, self.entries + other.entries)

    def minor(self, drop_row: int, drop_col: int) -> "Matrix":
        rows = [
            [e for j, e in enumerate(self.row(i)) if j != drop_col]
            for i in range(self.rows)
            if i != drop_row
        ]
        return Matrix.from_rows(self.field, rows, self.cols - 1)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field, self.rows, self.cols, self.entries) == (
            other.field, other.rows, other.cols, other.entries)

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in self.row(i)] for i in range(self.rows)]

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_strings()})"


def _det_rational(rows: list[list[Fraction]]) -> Fraction:
    scale = Fraction(1)
    ints = []
    for r in rows:
        m = lcm(*(v.denominator for v in r)) if r else 1
        scale *= m
        ints.append([int(v * m) for v in r])
    return Fraction(_bareiss(ints)) / scale


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] if n else 1


def _det_mod(rows: list[list[int]], p: int) -> int:
    a = [r[:] for r in rows]
    n = len(a)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] % p), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        akk = a[k][k]
        det = det * akk % p
        inv = pow(akk, -1, p)
        for i in range(k + 1, n):
            c = a[i][k] * inv % p
            if c:
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] = (row_i[j] - c * row_k[j]) % p
    return det % p


def det_field(m: Matrix) -> FieldElement:
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    raw = [[e.value for e in m.row(i)] for i in range(m.rows)]
    if m.field.kind == PRIME:
        return m.field(_det_mod(raw, m.field.modulus))
    return m.field(_det_rational(raw))


def solve_linear(m: Matrix, rhs: Sequence[FieldElement]) -> list[FieldElement]:
    """Solve ``m @ v = rhs`` for square invertible ``m`` by Gauss-Jordan."""
    n = m.rows
    if m.cols != n or len(rhs) != n:
        raise ValueError("solve_linear needs a square system")
    a = [list(m.row(i)) + [m.field(rhs[i])] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[k], a[piv] = a[piv], a[k]
        inv = a[k][k].inverse()
        a[k] = [e * inv for e in a[k]]
        for i in range(n):
            if i != k and not a[i][k].is_zero():
                c = a[i][k]
                a[i] = [e - c * f for e, f in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


def _check_nodes(nodes):
    seen = set()
    for x, m in nodes:
        if x in seen:
            raise ValueError(f"repeated node {x}")
        if m < 1:
            raise ValueError(f"multiplicity must be positive, got {m}")
        seen.add(x)


def build_confluent_vandermonde(nodes, u: int) -> Matrix:
    """(u+1) x (sum a_i) matrix; column (i, j) of row k is ``C(k, j) x_i**(k-j)``."""
    _check_nodes(nodes)
    field = nodes[0][0].field
    rows = []
    for k in range(u + 1):
        row = []
        for x, mult in nodes:
            for j in range(mult):
                row.append(binomial(k, j, field) * x ** (k - j) if k >= j else field.zero())
        rows.append(row)
    return Matrix.from_rows(field, rows, sum(m for _, m in nodes))


def build_data_matrix(nodes, data, u: int) -> Matrix:
    """Entry (k, (i, l)) is ``sum_{j<=l} C(k, j) y_{i,l-j} x_i**(k-j)``."""
    _check_nodes(nodes)
    if len(data) != len(nodes):
        raise ValueError("one data block per node required")
    for (x, mult), ys in zip(nodes, data):
        if len(ys) != mult:
            raise ValueError(f"node {x} has multiplicity {mult} but {len(ys)} values")
    field = nodes[0][0].field
    rows = []
    for k in range(u + 1):
        row = []
        for (x, mult), ys in zip(nodes, data):
            for l in range(mult):
                acc = field.zero()
                for j in range(min(l, k) + 1):
                    acc = acc + binomial(k, j, field) * ys[l - j] * x ** (k - j)
                row.append(acc)
        rows.append(row)
    return Matrix.from_rows(field, rows, sum(m for _, m in nodes))


def build_wronskian(nodes, g: Polynomial, rows: int) -> Matrix:
    """Divided derivatives ``(x**u g)^(t)(x_i) / t!`` for ``u < rows``, ``t < a_i``."""
    _check_nodes(nodes)
    field = g.field
    max_mult = max(m for _, m in nodes)
    inv_fact = []
    for t in range(max_mult):
        ft = small_factorial(t, field)
        if ft.is_zero():
            raise ZeroDivisionError(f"{t}! vanishes in {field}")
        inv_fact.append(ft.inverse())
    out = []
    for u in range(rows):
        h = g.shift(u)
        derivs = [poly_formal_derivative(h, t) for t in range(max_mult)]
        row = []
        for x, mult in nodes:
            for t in range(mult):
                row.append(poly_eval(derivs[t], x) * inv_fact[t])
        out.append(row)
    return Matrix.from_rows(field, out, sum(m for _, m in nodes))


def power_column(field: FieldSpec, n: int) -> list[Polynomial]:
    """The border ``1, x, ..., x**n``."""
    return [Polynomial.monomial(field, i) for i in range(n + 1)]


@dataclass(frozen=True)
class BorderedMatrix:
    """An ``n x (n-1)`` body whose final column is ``border`` (polynomial entries)."""

    body: Matrix
    border: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "border", tuple(self.border))
        if len(self.border) != self.body.rows:
            raise ValueError(f"border has {len(self.border)} entries for {self.body.rows} rows")
        if self.body.cols + 1 != self.body.rows:
            raise ValueError(
                f"body must be n x (n-1) to be square with the border, got "
                f"{self.body.rows}x{self.body.cols}")

    def evaluated(self, c) -> Matrix:
        """The scalar matrix with the border evaluated at ``x = c``."""
        rows = [list(self.body.row(i)) + [poly_eval(self.border[i], c)]
                for i in range(self.body.rows)]
        return Matrix.from_rows(self.body.field, rows)


def border_cofactors(body: Matrix) -> list[FieldElement]:
    """Signed cofactors of a missing final column of an ``n x (n-1)`` body."""
    n = body.rows
    if body.cols + 1 != n:
        raise ValueError(f"body must be n x (n-1), got {body.rows}x{body.cols}")
    out = []
    for i in range(n):
        rows = [list(body.row(r)) for r in range(n) if r != i]
        cof = det_field(Matrix.from_rows(body.field, rows, n - 1))
        out.append(-cof if (i + n - 1) % 2 else cof)
    return out


def combine_border(field: FieldSpec, cofactors: Sequence[FieldElement], border: Sequence[Polynomial]) -> Polynomial:
    acc = Polynomial.zero(field)
    for c, entry in zip(cofactors, border):
        if not c.is_zero() and not entry.is_zero():
            acc = acc + entry.scale(c)
    return acc


def det_bordered(m: BorderedMatrix) -> Polynomial:
    """Expand along the border column; each cofactor is a scalar determinant."""
    field = m.body.field
    n = m.body.rows
    acc = Polynomial.zero(field)
    for i, entry in enumerate(m.border):
        if entry.is_zero():
            continue
        rows = [list(m.body.row(r)) for r in range(n) if r != i]
        cof = det_field(Matrix.from_rows(field, rows, n - 1))
        if cof.is_zero():
            continue
        if (i + n - 1) % 2:
            cof = -cof
        acc = acc + entry.scale(cof)
    return acc
