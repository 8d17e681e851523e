from fractions import Fraction

import pytest

from kucomm.expr import ParseError, evaluate_text, parse
from kucomm.hopf import HopfElem
from kucomm.kumod import FElem, KuElem
from kucomm.multisym import z


def test_ku_arithmetic():
    assert evaluate_text("y1*y1", "ku") == KuElem.y(2).scale(2) + KuElem.y(1, a=1)
    assert evaluate_text("y1^2 - 2*y2", "ku") == KuElem.y(1, a=1)
    assert evaluate_text("(y1 - u)*y1", "ku") == KuElem.y(2).scale(2)
    assert evaluate_text("3", "ku") == KuElem.const(3)


def test_f_ring():
    assert evaluate_text("x*x", "f") == FElem.x(a=1)


def test_circ_binds_tighter_than_star():
    a = evaluate_text("zeta(1,0) o zeta(0,1) * zeta(0,1)", "hopf")
    b = evaluate_text("(zeta(1,0) o zeta(0,1)) * zeta(0,1)", "hopf")
    assert a == b
    assert evaluate_text("[2] o [3]", "hopf") == HopfElem.group(6)
    assert evaluate_text("[-1]", "hopf") == HopfElem.group(-1)


def test_fractions_in_rational_rings():
    assert evaluate_text("(z(0,1)^2 - z(0,2))/2", "msym") == (z(0, 1) ** 2 - z(0, 2)) / 2
    assert evaluate_text("zeta(1,1)/2", "hopf") == HopfElem.zeta(1, 1).scale(Fraction(1, 2))


@pytest.mark.parametrize(
    "text, ring, pos",
    [
        ("y1 *", "ku", 4),
        ("y1 $ y2", "ku", 3),
        ("(y1", "ku", 3),
        ("zeta(1,0)", "ku", 0),
        ("y1/2", "ku", 2),
        ("y1 o y1", "ku", 3),
        ("foo", "ku", 0),
        ("z(1)", "msym", 3),
    ],
)
def test_parse_errors_carry_positions(text, ring, pos):
    with pytest.raises(ParseError) as info:
        evaluate_text(text, ring)
    assert info.value.pos == pos


def test_whitespace_is_ignored():
    assert evaluate_text("y1 + y2", "ku") == evaluate_text(" y1+y2 ", "ku")
    assert parse("y1+y2")[0] == "+"
