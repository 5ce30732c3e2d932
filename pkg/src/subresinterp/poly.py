"""Dense univariate polynomials over a :class:`~subresinterp.field.FieldSpec`.

Coefficients are stored in ascending order of powers with no trailing zeros,
so the zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from functools import total_ordering
from typing import Iterable, Sequence

from .field import FieldElement, FieldError, FieldSpec, binomial


@total_ordering
class _ZeroDegree:
    """Degree of the zero polynomial: below every integer, no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


ZERO_DEGREE = _ZeroDegree()


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs: tuple[FieldElement, ...] = tuple(cs)

    @classmethod
    def zero(cls, field: FieldSpec) -> "Polynomial":
        return cls(field)

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "Polynomial":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: FieldSpec, n: int, c=1) -> "Polynomial":
        return cls(field, [0] * n + [c])

    @classmethod
    def x(cls, field: FieldSpec) -> "Polynomial":
        return cls.monomial(field, 1)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def padded(self, length: int) -> list[FieldElement]:
        """Coefficients zero-padded (never truncated) to ``length``."""
        if length < len(self.coeffs):
            raise ValueError(f"degree {self.degree} does not fit in {length} slots")
        return list(self.coeffs) + [self.field.zero()] * (length - len(self.coeffs))

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        return self.scale(self.leading().inverse())

    def _check(self, other: "Polynomial"):
        if other.field != self.field:
            raise FieldError(f"cannot mix polynomials over {self.field} and {other.field}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, FieldElement) or isinstance(other, int):
            return Polynomial(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self.field, [c * a for a in self.coeffs])

    def shift(self, n: int) -> "Polynomial":
        """Multiply by ``x**n``."""
        if not self.coeffs:
            return self
        return Polynomial(self.field, [0] * n + list(self.coeffs))

    def __pow__(self, n: int):
        out = Polynomial(self.field, [1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __call__(self, x) -> FieldElement:
        return poly_eval(self, x)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return f"Polynomial({self.field}, 0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            terms.append(str(c) if i == 0 else f"{c}*x^{i}" if i > 1 else f"{c}*x")
        return f"Polynomial({self.field}, {' + '.join(terms)})"


def poly_eval(p: Polynomial, x) -> FieldElement:
    x = p.field(x)
    acc = p.field.zero()
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_formal_derivative(p: Polynomial, k: int = 1) -> Polynomial:
    """k-th formal derivative; the falling factorials are integers mapped into the field."""
    if k == 0:
        return p
    out = []
    for i in range(k, len(p.coeffs)):
        ff = 1
        for t in range(i - k + 1, i + 1):
            ff *= t
        out.append(p.coeffs[i] * ff)
    return Polynomial(p.field, out)


def taylor_coefficients(p: Polynomial, x, count: int) -> list[FieldElement]:
    """First ``count`` coefficients of ``p`` expanded around ``x``.

    Coefficient ``j`` is ``sum_c C(c, j) p_c x**(c-j)``, which equals
    ``p^(j)(x)/j!`` in characteristic zero but needs no division.
    """
    x = p.field(x)
    out = []
    for j in range(count):
        acc = p.field.zero()
        for c in range(len(p.coeffs) - 1, j - 1, -1):
            acc = acc * x + p.coeffs[c] * binomial(c, j, p.field)
        out.append(acc)
    return out


def poly_divmod(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    num._check(den)
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    field = num.field
    r = list(num.coeffs)
    dd = len(den.coeffs) - 1
    inv_lc = den.leading().inverse()
    if len(r) <= dd:
        return Polynomial(field), num
    q = [field.zero()] * (len(r) - dd)
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] * inv_lc
        if c.is_zero():
            continue
        q[i - dd] = c
        for j, b in enumerate(den.coeffs):
            r[i - dd + j] = r[i - dd + j] - c * b
    return Polynomial(field, q), Polynomial(field, r[:dd])


def poly_gcd_monic(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while not q.is_zero():
        p, q = q, poly_divmod(p, q)[1]
    return p.monic()


def poly_from_roots(nodes: Sequence[tuple]) -> Polynomial:
    """Monic ``prod (x - x_j)**a_j``; node values must be pairwise distinct."""
    if not nodes:
        raise ValueError("need at least one node")
    field = nodes[0][0].field if isinstance(nodes[0][0], FieldElement) else None
    if field is None:
        raise TypeError("node values must be FieldElements")
    seen = set()
    out = Polynomial(field, [1])
    for x, m in nodes:
        x = field(x)
        if x in seen:
            raise ValueError(f"repeated node {x}")
        if m < 1:
            raise ValueError(f"multiplicity must be positive, got {m}")
        seen.add(x)
        out = out * Polynomial(field, [-x, 1]) ** m
    return out


def vanishing_order(p: Polynomial, x) -> int | None:
    """Multiplicity of ``x`` as a root, by repeated exact division; ``None`` for zero."""
    if p.is_zero():
        return None
    lin = Polynomial(p.field, [-p.field(x), 1])
    k = 0
    while True:
        q, r = poly_divmod(p, lin)
        if not r.is_zero():
            return k
        p, k = q, k + 1
