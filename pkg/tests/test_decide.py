import random
from fractions import Fraction

import pytest

from meadows.checks import (
    check_decide_eq,
    check_simple_expressible,
    check_sum_star,
)
from meadows.decide import (
    LocusWitness,
    PointWitness,
    SupportSum,
    decide_eq,
    distinguishing_witness,
    finite_support_sum,
    simple_expressible,
    sum_star_equals,
)
from meadows.generate import random_term
from meadows.normalform import Model, eval_term, eval_term_mod
from meadows.poly import Poly
from meadows.terms import TermClass, classify, format_term, parse


def test_model_separation_pair():
    s = parse("1/(x^2-2) + 1/1")
    u = parse("(x^2-1)/(x^2-2)")
    assert decide_eq(s, u, Model.RAT)
    assert not decide_eq(s, u, Model.COMPLEX)


def test_reflexivity():
    rng = random.Random(50)
    for _ in range(20):
        t = random_term(rng, depth=4)
        assert decide_eq(t, t, Model.RAT)
        assert decide_eq(t, t, Model.COMPLEX)


def test_pole_sum_differs_from_plain_fraction():
    assert not decide_eq(parse("1/x + 1/1"), parse("(1+x)/x"), Model.RAT)


def test_point_witness_for_rational_difference():
    w = distinguishing_witness(parse("1/x + 1/1"), parse("(1+x)/x"), Model.RAT)
    assert isinstance(w, PointWitness)
    assert w.point == 0
    assert (w.left, w.right) == (Fraction(1), Fraction(0))
    assert eval_term(parse("1/x + 1/1"), w.point) == w.left


def test_locus_witness_for_complex_difference():
    s = parse("1/(x^2-2) + 1/1")
    u = parse("(x^2-1)/(x^2-2)")
    w = distinguishing_witness(s, u, Model.COMPLEX)
    assert isinstance(w, LocusWitness)
    assert w.locus == Poly((-2, 0, 1))
    assert eval_term_mod(s, w.locus) == w.left
    assert eval_term_mod(u, w.locus) == w.right
    assert w.left != w.right


def test_witness_none_for_equal_terms():
    assert distinguishing_witness(parse("x + x"), parse("2*x"), Model.COMPLEX) is None


def test_decide_eq_properties():
    assert check_decide_eq(seed=51, rounds=100).ok


def test_simple_expressible_x_over_x():
    result = simple_expressible(parse("x/x"))
    assert result is not None
    assert format_term(result) == "x/x"


def test_simple_expressible_refuses_nonzero_jump():
    assert simple_expressible(parse("1/x + 1/1")) is None


def test_simple_expressible_already_simple():
    t = parse("(x^2-1)/(x^2-2)")
    result = simple_expressible(t)
    assert result is not None
    assert classify(result) is TermClass.SIMPLE_FRACTION
    assert decide_eq(t, result, Model.RAT)


def test_simple_expressible_zero():
    result = simple_expressible(parse("0"))
    assert result is not None
    assert format_term(result) == "0/1"


def test_simple_expressible_property():
    assert check_simple_expressible(seed=52, rounds=150).ok


def test_sum_star_paper_cases():
    assert finite_support_sum(parse("1 - x/x"), Model.COMPLEX) == SupportSum(
        Fraction(1), True
    )
    assert finite_support_sum(parse("x^3 + 2"), Model.COMPLEX) == SupportSum(
        Fraction(0), False
    )


def test_sum_star_over_roots():
    got = finite_support_sum(
        parse("(1 - (x^2+3*x)/(x^2+3*x)) * x"), Model.COMPLEX
    )
    assert got == SupportSum(Fraction(-3), True)


def test_sum_star_complex_counts_irrational_roots():
    # support {sqrt2, -sqrt2} with value x^2 = 2 at both roots
    t = parse("(1 - (x^2-2)/(x^2-2)) * x^2")
    assert finite_support_sum(t, Model.COMPLEX) == SupportSum(Fraction(4), True)
    # over the rationals the support is empty
    assert finite_support_sum(t, Model.RAT) == SupportSum(Fraction(0), True)


def test_sum_star_infinite_support_forces_zero():
    with pytest.raises(ValueError):
        SupportSum(Fraction(1), False)


def test_sum_star_equals_examples():
    assert sum_star_equals(parse("1 - x/x"), parse("1"), Model.COMPLEX)
    assert sum_star_equals(parse("x"), parse("0"), Model.COMPLEX)
    assert sum_star_equals(
        parse("(1 - (x^2+3*x)/(x^2+3*x)) * x"), parse("0 - 3"), Model.COMPLEX
    )


def test_sum_star_equals_rejects_open_comparand():
    with pytest.raises(ValueError):
        sum_star_equals(parse("x"), parse("x"), Model.COMPLEX)


def test_sum_star_oracle_property():
    assert check_sum_star(seed=53, rounds=100).ok
