from fractions import Fraction

import pytest

from resint.algebra.cyclotomic import (KAPPA, ONE, ZERO, ZETA, ZETA2, CycQ, add, eval_divisor, inv, mul,
                                       parse_cycq, parse_rational)
from resint.conditions.components import RationalPool
from resint.errors import ParseError


def test_product_reduces_z_squared():
    assert mul(CycQ(1, 2), CycQ(3, 4)) == CycQ(-5, 2)
    assert ZETA * ZETA == ZETA2


def test_cube_roots_of_unity():
    assert ZETA ** 3 == ONE
    assert ONE + ZETA + ZETA2 == ZERO
    assert KAPPA == (ONE, ZETA, ZETA2)


def test_inverse():
    value = CycQ(2, 3)
    assert value.norm() == 7
    assert inv(value) == CycQ(Fraction(-1, 7), Fraction(-3, 7))
    assert value * value.inv() == ONE
    assert ZETA.inv() == ZETA2


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_add_and_mixed_scalars():
    assert add(CycQ(1, 1), CycQ(Fraction(1, 2), -1)) == CycQ(Fraction(3, 2), 0)
    assert 2 * ZETA + 1 == CycQ(1, 2)
    assert 1 - ZETA == CycQ(1, -1)
    assert CycQ(3) == 3
    assert hash(CycQ(3)) == hash(Fraction(3))


def test_conjugate_and_norm():
    value = CycQ(1, 2)
    assert value.conjugate() == CycQ(-1, -2)
    assert value * value.conjugate() == CycQ(value.norm())


def test_eval_divisor():
    assert eval_divisor(0, 0, 1) == CycQ(-1, -1)
    assert eval_divisor(1, 0, 0) == ONE
    assert eval_divisor(0, 1, 0) == ZETA
    assert not eval_divisor(4, 4, 4)
    assert eval_divisor(2, 1, 1) == ONE


def test_negative_power():
    assert CycQ(2) ** -2 == CycQ(Fraction(1, 4))


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.re = Fraction(2)


@pytest.mark.parametrize("text, expected", [
    ("1/2 - 3/4*z", CycQ(Fraction(1, 2), Fraction(-3, 4))),
    ("-z", CycQ(0, -1)),
    ("2 + 1*z", CycQ(2, 1)),
    (" 3 / 6 ", CycQ(Fraction(1, 2))),
    ("z + z", CycQ(0, 2)),
    ("0", ZERO),
])
def test_parse(text, expected):
    assert parse_cycq(text) == expected


@pytest.mark.parametrize("value, text", [
    (CycQ(Fraction(1, 2), Fraction(-3, 4)), "1/2 - 3/4*z"),
    (CycQ(0, Fraction(-1, 2)), "-1/2*z"),
    (CycQ(-5, 2), "-5 + 2*z"),
    (ZERO, "0"),
])
def test_text_form(value, text):
    assert str(value) == text
    assert parse_cycq(text) == value


@pytest.mark.parametrize("text", ["", "   ", "1/0", "2 3", "x", "1/2*y"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_cycq(text)


def test_parse_error_reports_column():
    with pytest.raises(ParseError) as excinfo:
        parse_cycq("1 + q")
    assert excinfo.value.column is not None
    assert "column" in str(excinfo.value)


def test_parse_rational():
    assert parse_rational("-6/4") == Fraction(-3, 2)
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_to_complex_matches_root_of_unity():
    value = ZETA.to_complex()
    assert abs(value ** 3 - 1) < 1e-12


def draw_cycq(pool):
    return pool.draw() + pool.draw() * ZETA


@pytest.mark.parametrize("seed", range(20))
def test_field_axioms_on_random_elements(seed):
    pool = RationalPool(seed)
    a, b, c = draw_cycq(pool), draw_cycq(pool), draw_cycq(pool)
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + (-a) == ZERO
    assert a * ONE == a
    if a:
        assert a * inv(a) == ONE
        assert (b / a) * a == b
        assert a.norm() > 0
    else:
        assert a.norm() == 0
