import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from subresinterp.field import (
    FieldError,
    FieldSpec,
    field_inv,
    field_parse,
    field_print,
    is_prime,
    small_factorial,
)

from conftest import GF7, GF101, QQ

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)


def elements(field):
    if field.kind == "rational":
        return rationals.map(field)
    return st.integers(min_value=-10**30, max_value=10**30).map(field)


def test_parse_examples():
    assert field_parse("-8", QQ) == QQ(-8)
    half = field_parse("1/2", QQ)
    assert half.value == Fraction(1, 2)
    assert field_parse("2/4", QQ).value == Fraction(1, 2)
    assert field_parse("3/-6", QQ).value == Fraction(-1, 2)
    assert field_parse("16", GF7).value == 2
    assert field_parse("-1", GF7).value == 6


@pytest.mark.parametrize("text, field", [
    ("1/2", GF7),
    ("1/0", QQ),
    ("1.5", QQ),
    ("", QQ),
    ("x", GF7),
    ("1//2", QQ),
])
def test_parse_rejects(text, field):
    with pytest.raises(FieldError):
        field_parse(text, field)


def test_inverse():
    assert field_inv(GF7(2)) == GF7(4)
    assert field_inv(QQ(Fraction(1, 2))) == QQ(2)
    with pytest.raises(ZeroDivisionError):
        field_inv(QQ(0))
    with pytest.raises(ZeroDivisionError):
        field_inv(GF7(14))


def test_small_factorial():
    assert small_factorial(3, QQ) == QQ(6)
    assert small_factorial(7, GF7).is_zero()
    assert small_factorial(6, GF7) == GF7(-1)  # Wilson
    assert small_factorial(0, QQ) == QQ(1)
    assert small_factorial(0, GF7) == GF7(1)


def test_composite_modulus_rejected():
    for n in (1, 0, -7, 4, 91, 561, 2**64 + 1, (2**61 - 1) * (2**31 - 1)):
        with pytest.raises(FieldError):
            FieldSpec.prime(n)


def test_primality():
    assert [n for n in range(60) if is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(2**61 - 1)
    assert is_prime(2**127 - 1)  # probabilistic branch
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    assert not is_prime((2**89 - 1) * (2**61 - 1))


def test_mixing_fields_raises():
    with pytest.raises(FieldError):
        GF7(1) + GF101(1)
    with pytest.raises(FieldError):
        GF7(1) + QQ(1)


def random_element(field, rng):
    if field.kind == "rational":
        return field(Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6)))
    return field(rng.randint(-10**30, 10**30))


@pytest.mark.parametrize("field", [QQ, GF7, GF101], ids=str)
def test_field_axioms(field):
    rng = random.Random(2024)
    for _ in range(1000):
        x, y, z = (random_element(field, rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x + y == y + x
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + field.zero() == x
        assert x * field.one() == x
        assert x + (-x) == field.zero()
        assert x - y == x + (-y)
        if not x.is_zero():
            assert x * x.inverse() == field.one()
            assert (y / x) * x == y


@pytest.mark.parametrize("field", [QQ, GF7, GF101], ids=str)
def test_print_parse_roundtrip(field):
    @settings(max_examples=200, deadline=None)
    @given(elements(field))
    def check(x):
        assert field_parse(field_print(x), field) == x

    check()


def test_canonical_forms():
    q = QQ(Fraction(6, -4))
    assert q.value.denominator > 0
    assert str(q) == "-3/2"
    assert GF7(-15).value == 6
    assert str(GF7(-15)) == "6"
