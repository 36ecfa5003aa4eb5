from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leonard.errors import CharTwoUnsupported, DivisionByZero, FieldMismatch, InvalidField
from leonard.exactfield import QQ, FieldSpec, arith, characteristic_guard, is_prime, solve_quadratic_in_field, sqrt

GF5 = FieldSpec.prime(5)
GF13 = FieldSpec.prime(13)
BIG = FieldSpec.prime(1_000_000_007)  # above the exhaustive-search cutoff


def test_arith_examples():
    assert arith(QQ("1/2"), QQ("1/3"), "add") == QQ("5/6")
    assert arith(GF5(3), GF5(4), "mul") == GF5(2)
    with pytest.raises(DivisionByZero):
        arith(QQ(7), QQ(0), "div")
    with pytest.raises(DivisionByZero):
        arith(GF5(3), GF5(0), "div")


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        arith(QQ(1), GF5(1), "add")
    with pytest.raises(FieldMismatch):
        QQ(1) == GF5(1)


def test_canonical_representation():
    x = QQ(Fraction(6, -4))
    assert x.value == Fraction(-3, 2) and x.value.denominator > 0
    assert GF5(-1).value == 4
    assert GF13(Fraction(1, 2)).value == 7
    assert str(QQ("-10/4")) == "-5/2"
    assert str(QQ("−3")) == "-3"


@pytest.mark.parametrize("text", ["", "1.5", "abc", "1//2", "--1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        QQ.parse(text)


def test_prime_check():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2**61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7
    with pytest.raises(InvalidField):
        FieldSpec.prime(15)


def test_characteristic_guard():
    assert characteristic_guard(QQ, 10)
    assert characteristic_guard(GF5, 4)
    assert not characteristic_guard(FieldSpec.prime(3), 4)
    assert not characteristic_guard(FieldSpec.prime(2), 1)


def test_quadratic_examples():
    assert set(solve_quadratic_in_field(QQ(1), QQ(0), QQ(-4))) == {QQ(2), QQ(-2)}
    assert solve_quadratic_in_field(QQ(1), QQ(0), QQ(-6)) == ()
    assert set(solve_quadratic_in_field(GF5(1), GF5(0), GF5(-1))) == {GF5(1), GF5(4)}
    assert solve_quadratic_in_field(QQ(1), QQ(-2), QQ(1)) == (QQ(1),)


def test_quadratic_char_two():
    F2 = FieldSpec.prime(2)
    with pytest.raises(CharTwoUnsupported):
        solve_quadratic_in_field(F2(1), F2(1), F2(1))


def test_tonelli_shanks_large_prime():
    # p = 1e9+7 has p-1 = 2 * 500000003, so use a prime with a larger 2-adic part too
    for f in (BIG, FieldSpec.prime(998244353)):
        for v in (2, 3, 5, 12345):
            x = f(v) * f(v)
            r = sqrt(x)
            assert r is not None and r * r == x


def test_rational_sqrt():
    assert sqrt(QQ("9/4")) == QQ("3/2")
    assert sqrt(QQ(24)) is None
    assert sqrt(QQ(-1)) is None


rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50))
fields = st.sampled_from([QQ, GF5, GF13, FieldSpec.prime(101)])


@given(fields, rationals, rationals, rationals)
def test_field_axioms(f, x, y, z):
    try:
        a, b, c = f(x), f(y), f(z)
    except DivisionByZero:
        return
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(fields, rationals, rationals, rationals)
def test_quadratic_roots_are_roots(f, x, y, z):
    try:
        a, b, c = f(x), f(y), f(z)
    except DivisionByZero:
        return
    if not a:
        return
    roots = solve_quadratic_in_field(a, b, c)
    for r in roots:
        assert a * r * r + b * r + c == 0
    if len(roots) == 2:
        r1, r2 = roots
        assert r1 + r2 == -b / a
        assert r1 * r2 == c / a
    if f.p is not None and f.p < 200:
        # exhaustive cross-check over the small field
        brute = {e for e in f.elements() if a * e * e + b * e + c == 0}
        assert brute == set(roots)
