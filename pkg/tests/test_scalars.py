"""Exact field arithmetic: canonical forms, evaluation, tag discipline."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from psifoc import scalars
from psifoc.errors import DivisionByZero, MixedFieldTags, PoleAtPoint
from psifoc.scalars import Q, RatFunc, eval_ratfunc, render


def test_rational_add():
    assert scalars.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_ratfunc_cancellation():
    # (q^2 - 1)/(q - 1) reduces to q + 1
    f = RatFunc([-1, 0, 1], [-1, 1])
    assert f == RatFunc([1, 1])
    assert f.num == (1, 1) and f.den == (1,)


def test_empty_power_is_one():
    assert scalars.powi(RatFunc([1, 1]), 0) == RatFunc.one()
    assert scalars.powi(Fraction(7, 3), 0) == 1
    assert scalars.powi(0, 0) == 1


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        scalars.powi(Q, -1)


def test_eval_gauss_binomial_42_at_2():
    # expand the (4, 2) Gaussian binomial by hand: 1 + q + 2q^2 + q^3 + q^4
    # and substitute q = 2: 1 + 2 + 8 + 8 + 16 = 35
    f = RatFunc([1, 1, 2, 1, 1])
    assert eval_ratfunc(f, 2) == 35


def test_eval_identity():
    assert eval_ratfunc(Q, 1) == 1


def test_eval_pole():
    f = RatFunc([1], [1, -1])
    with pytest.raises(PoleAtPoint):
        eval_ratfunc(f, 1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        scalars.div(1, 0)
    with pytest.raises(DivisionByZero):
        scalars.div(Q, RatFunc.zero())
    with pytest.raises(DivisionByZero):
        RatFunc([1], [])


def test_mixed_tags_rejected():
    with pytest.raises(MixedFieldTags):
        scalars.add(Fraction(1, 2), Q)
    with pytest.raises(MixedFieldTags):
        scalars.mul(Q, 3)
    with pytest.raises(MixedFieldTags):
        scalars.div(2, RatFunc([1, 1]))


def test_strict_ops_same_tag():
    assert scalars.mul(RatFunc([1, 1]), RatFunc([1, -1])) == RatFunc([1, 0, -1])
    assert scalars.sub(5, 2) == 3
    assert scalars.neg(Q) == RatFunc([0, -1])


def test_render_forms():
    assert render(Fraction(5, 6)) == "5/6"
    assert render(7) == "7"
    assert render(Fraction(-3, 2)) == "-3/2"
    assert render(RatFunc([1, 1])) == "1 + q"
    assert render(RatFunc([1, 1, 2, 1, 1])) == "1 + q + 2*q^2 + q^3 + q^4"
    assert render(RatFunc([1, -2, 1])) == "1 - 2*q + q^2"
    assert render(RatFunc.zero()) == "0"
    assert render(RatFunc([0, 1], [1, 1])) == "(q)/(1 + q)"


def test_parse_rational():
    assert scalars.parse_rational("7") == 7
    assert scalars.parse_rational("-3/2") == Fraction(-3, 2)
    assert scalars.parse_rational("6/3") == 2
    with pytest.raises(ValueError):
        scalars.parse_rational("1/0")
    with pytest.raises(ValueError):
        scalars.parse_rational("q")


def test_monic_denominator():
    f = RatFunc([1], [2, 4])  # 1/(2 + 4q) -> (1/4)/(1/2 + q)
    assert f.den[-1] == 1
    assert f * RatFunc([2, 4]) == RatFunc.one()


_coeffs = st.integers(min_value=-4, max_value=4)
_polys = st.lists(_coeffs, min_size=0, max_size=5)
_nonzero_polys = _polys.filter(lambda c: any(c))


def _ratfuncs():
    return st.builds(RatFunc, _polys, _nonzero_polys)


@given(_ratfuncs(), _ratfuncs())
@settings(max_examples=100, deadline=None)
def test_canonical_uniqueness(a, b):
    # a - b is zero exactly when the canonical forms coincide
    assert ((a - b) == RatFunc.zero()) == ((a.num, a.den) == (b.num, b.den))
    assert (a == b) == ((a.num, a.den) == (b.num, b.den))


@given(_ratfuncs(), _ratfuncs(),
       st.fractions(min_value=-3, max_value=3, max_denominator=4))
@settings(max_examples=100, deadline=None)
def test_substitution_homomorphism(f, g, q0):
    try:
        lhs = eval_ratfunc(f * g, q0)
        rhs_f = eval_ratfunc(f, q0)
        rhs_g = eval_ratfunc(g, q0)
    except PoleAtPoint:
        return
    assert lhs == scalars.normalize(Fraction(rhs_f) * Fraction(rhs_g))


@given(_ratfuncs(), _ratfuncs(), _ratfuncs())
@settings(max_examples=60, deadline=None)
def test_field_axioms_sample(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)


@given(_ratfuncs())
@settings(max_examples=60, deadline=None)
def test_multiplicative_inverse(a):
    if a == RatFunc.zero():
        return
    assert a * (RatFunc.one() / a) == RatFunc.one()
