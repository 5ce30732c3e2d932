"""Exact scalars: arbitrary-precision rationals and residues modulo a prime.

Every value is immutable. Rationals are kept in lowest terms with a positive
denominator (``fractions.Fraction`` does this eagerly), residues are kept in
``[0, p)``.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RATIONAL = "rational"
PRIME = "prime"

_MR_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_RANDOM_ROUNDS = 40

_INT_RE = re.compile(r"^[+-]?\d+$")
_FRAC_RE = re.compile(r"^([+-]?\d+)/([+-]?\d+)$")


class FieldError(ValueError):
    """Malformed scalar text, bad modulus, or mixing elements of two fields."""


def _miller_rabin_round(n: int, d: int, s: int, base: int) -> bool:
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 2**64, 40 random rounds above."""
    if n < 2:
        return False
    for q in _MR_DETERMINISTIC_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        bases = _MR_DETERMINISTIC_BASES
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(_MR_RANDOM_ROUNDS))
    return all(_miller_rabin_round(n, d, s, b) for b in bases)


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.modulus is not None:
                raise FieldError("rational field takes no modulus")
        elif self.kind == PRIME:
            if not isinstance(self.modulus, int) or not is_prime(self.modulus):
                raise FieldError(f"modulus {self.modulus!r} is not prime")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(RATIONAL)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p)

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONAL else self.modulus

    def __call__(self, value: Union[int, Fraction, "FieldElement"]) -> "FieldElement":
        """Embed an integer (or, over Q, a Fraction) into the field."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if self.kind == PRIME:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    return self(value.numerator) / self(value.denominator)
                value = value.numerator
            return FieldElement(self, value % self.modulus)
        return FieldElement(self, Fraction(value))

    def zero(self) -> "FieldElement":
        return self(0)

    def one(self) -> "FieldElement":
        return self(1)

    def parse(self, text: str) -> "FieldElement":
        return field_parse(text, self)

    def __str__(self):
        return "QQ" if self.kind == RATIONAL else f"GF({self.modulus})"


class FieldElement:
    """An element of a :class:`FieldSpec`. Use ``field(value)`` to build one."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"cannot mix {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def _wrap(self, v) -> "FieldElement":
        if self.field.kind == PRIME:
            v %= self.field.modulus
        return FieldElement(self.field, v)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.value * other.value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def inverse(self) -> "FieldElement":
        return field_inv(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * field_inv(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * field_inv(self)

    def __pow__(self, n: int):
        if n < 0:
            return field_inv(self) ** (-n)
        if self.field.kind == PRIME:
            return FieldElement(self.field, pow(self.value, n, self.field.modulus))
        return FieldElement(self.field, self.value**n)

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return field_print(self)

    def __repr__(self):
        return f"{self.field}({field_print(self)})"


def field_parse(text: str, field: FieldSpec) -> FieldElement:
    """Parse ``"-8"`` or ``"1/2"`` (rationals only) into an exact element."""
    if not isinstance(text, str):
        raise FieldError(f"scalar must be a string, got {type(text).__name__}")
    s = text.strip()
    if _INT_RE.match(s):
        return field(int(s))
    m = _FRAC_RE.match(s)
    if m:
        if field.kind == PRIME:
            raise FieldError(f"fraction {text!r} not accepted in {field}")
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise FieldError(f"zero denominator in {text!r}")
        return field(Fraction(num, den))
    raise FieldError(f"malformed scalar {text!r}")


def field_print(x: FieldElement) -> str:
    v = x.value
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


def field_inv(x: FieldElement) -> FieldElement:
    if x.value == 0:
        raise ZeroDivisionError(f"zero has no inverse in {x.field}")
    if x.field.kind == PRIME:
        return FieldElement(x.field, pow(x.value, -1, x.field.modulus))
    return FieldElement(x.field, 1 / x.value)


def small_factorial(j: int, field: FieldSpec) -> FieldElement:
    """Image of ``j!`` in the field; zero in GF(p) once ``j >= p``."""
    return field(math.factorial(j))


def binomial(n: int, k: int, field: FieldSpec) -> FieldElement:
    """``C(n, k)`` computed over the integers, then mapped into the field."""
    if k < 0 or k > n:
        return field.zero()
    return field(math.comb(n, k))
