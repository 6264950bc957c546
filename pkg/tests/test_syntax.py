import pytest

from ppmod.fields import GF
from ppmod.algebra import kronecker_algebra, truncated_dvr
from ppmod.ppformula import (LEFT, RIGHT, annihilator, bottom, divisibility,
                             dual, pp_meet, pp_sum, tautology)
from ppmod.ppsyntax import format_formula, parse_formula

F2 = GF(2)


@pytest.fixture(scope="module")
def d3():
    return truncated_dvr(3, F2)


def test_parse_simple_annihilator(d3):
    phi = parse_formula(d3, "x1*x = 0")
    assert phi.n == 1 and phi.l == 0 and phi.m == 1
    assert phi.equivalent(annihilator(d3, d3.el_from_label("x")))


def test_parse_divisibility_with_e_block(d3):
    phi = parse_formula(d3, "E y1 . (x1 - y1*x = 0)")
    assert phi.l == 1
    assert phi.equivalent(divisibility(d3, d3.el_from_label("x")))


def test_parse_conjunction_and_combo_coefficient(d3):
    phi = parse_formula(d3, "(x1*(1 + x) = 0 & x1*x^2 = 0)")
    assert phi.m == 2
    assert phi.n == 1


def test_roundtrip_canonical_forms(d3):
    kron = kronecker_algebra(F2)
    formulas = [
        tautology(d3), bottom(d3),
        divisibility(d3, d3.el_from_label("x")),
        annihilator(d3, d3.el_from_label("x^2")),
        pp_sum(divisibility(d3, d3.el_from_label("x")),
               annihilator(d3, d3.el_from_label("x"))),
        pp_meet(divisibility(d3, d3.el_from_label("x^2")),
                annihilator(d3, d3.el_from_label("x"))),
        divisibility(kron, kron.el_from_label("a")),
        dual(divisibility(d3, d3.el_from_label("x"))),
        dual(annihilator(kron, kron.el_from_label("b"))),
    ]
    for phi in formulas:
        text = format_formula(phi)
        back = parse_formula(phi.algebra, text, phi.side)
        assert format_formula(back) == text          # print . parse stable
        assert back.equivalent(phi)                  # and semantics kept
        assert back.n == phi.n


def test_unused_x_variable_round_trips(d3):
    # a two-variable formula that only constrains x2
    from ppmod.ppformula import PpFormula
    x = d3.el_from_label("x")
    phi = PpFormula(d3, RIGHT, 2, 0, [[d3.zero_el()], [x]])
    text = format_formula(phi)
    back = parse_formula(d3, text)
    assert back.n == 2
    assert format_formula(back) == text


def test_left_side_orientation(d3):
    phi = parse_formula(d3, "x*x1 = 0", side=LEFT)
    assert phi.side == LEFT
    assert phi.equivalent(annihilator(d3, d3.el_from_label("x"), side=LEFT))
    text = format_formula(phi)
    assert "x*x1" in text


def test_undeclared_y_rejected(d3):
    with pytest.raises(ValueError):
        parse_formula(d3, "(x1 - y1*x = 0)")


def test_parse_errors(d3):
    with pytest.raises(ValueError):
        parse_formula(d3, "x1*x = 1")
    with pytest.raises(ValueError):
        parse_formula(d3, "E y1 . x1")
