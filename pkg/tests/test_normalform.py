import random
from fractions import Fraction

import pytest

from meadows.checks import (
    check_desugar,
    check_model_refinement,
    check_nf_canonicity,
    check_nf_homomorphism,
    check_nf_minimality,
    check_nf_soundness,
)
from meadows.generate import random_term
from meadows.normalform import (
    LocusMustSplitError,
    Model,
    PointwiseNF,
    eval_term,
    eval_term_mod,
    nf_add,
    nf_eval,
    nf_inv,
    nf_mul,
    nf_neg,
    normalize,
)
from meadows.poly import P_ONE, P_ZERO, Poly
from meadows.terms import parse

X = Poly((0, 1))

EXAMPLE2 = "1/(x^2+3*x) + (2*x+5)/(x^5+1) + (x^3+2)/(3*x^2-7)"


def test_eval_term_example2_values():
    t = parse(EXAMPLE2)
    assert eval_term(t, Fraction(0)) == Fraction(33, 7)
    assert eval_term(t, Fraction(-3)) == Fraction(1, 242) - Fraction(5, 4)
    assert eval_term(t, Fraction(-3)) == Fraction(-603, 484)


def test_eval_term_x_over_x_at_zero():
    assert eval_term(parse("x/x"), Fraction(0)) == 0
    assert eval_term(parse("x/x"), Fraction(5)) == 1


def test_eval_term_mod_constant_shift():
    # x^2 + 2 is congruent to 1 modulo x^2 + 1
    s = eval_term_mod(parse("1/(x^2+2)"), Poly((1, 0, 1)))
    assert s == P_ONE


def test_eval_term_mod_zero_inverse():
    assert eval_term_mod(parse("1/x"), X) == P_ZERO


def test_eval_term_mod_cube():
    assert eval_term_mod(parse("x^3"), Poly((2, 0, 1))) == Poly((0, -2))


def test_eval_term_mod_detects_reducible_locus():
    with pytest.raises(LocusMustSplitError):
        eval_term_mod(parse("1/(x-1)"), Poly((-1, 0, 1)))


def test_eval_term_mod_rejects_constant_modulus():
    with pytest.raises(ValueError):
        eval_term_mod(parse("x"), P_ONE)


def test_normalize_x_over_x():
    nf = normalize(parse("x/x"), Model.RAT)
    assert nf == PointwiseNF(P_ONE, P_ONE, ((Fraction(0), Fraction(0)),))


def test_normalize_sum_with_pole():
    nf = normalize(parse("1/x + 1/1"), Model.RAT)
    assert nf.num == Poly((1, 1))
    assert nf.den == X
    assert nf.exceptions == ((Fraction(0), Fraction(1)),)


def test_normalize_model_separation_pair():
    t = parse("1/(x^2-2) + 1/1")
    nf_q = normalize(t, Model.RAT)
    assert nf_q.num == Poly((-1, 0, 1))
    assert nf_q.den == Poly((-2, 0, 1))
    assert nf_q.exceptions == ()
    nf_c = normalize(t, Model.COMPLEX)
    assert nf_c.num == Poly((-1, 0, 1))
    assert nf_c.den == Poly((-2, 0, 1))
    assert nf_c.corrections == ((Poly((-2, 0, 1)), P_ONE),)


def test_normalize_example2_exceptions():
    nf = normalize(parse(EXAMPLE2), Model.RAT)
    assert dict(nf.exceptions) == {
        Fraction(-3): Fraction(-603, 484),
        Fraction(0): Fraction(33, 7),
        Fraction(-1): Fraction(-3, 4),
    }


def test_normalize_closed_term_is_constant():
    nf = normalize(parse("5 - 2/7"), Model.RAT)
    assert nf == PointwiseNF(Poly.constant(Fraction(33, 7)), P_ONE, ())


def test_nf_add_example():
    one_over_x = normalize(parse("1/x"), Model.RAT)
    one = normalize(parse("1/1"), Model.RAT)
    combined = nf_add(one_over_x, one)
    assert combined == normalize(parse("1/x + 1/1"), Model.RAT)


def test_nf_add_zero_identity():
    rng = random.Random(30)
    zero_q = normalize(parse("0"), Model.RAT)
    zero_c = normalize(parse("0"), Model.COMPLEX)
    for _ in range(25):
        t = random_term(rng, depth=4)
        assert nf_add(normalize(t, Model.RAT), zero_q) == normalize(t, Model.RAT)
        assert nf_add(normalize(t, Model.COMPLEX), zero_c) == normalize(
            t, Model.COMPLEX
        )


def test_nf_mul_x_with_inverse():
    product = nf_mul(normalize(parse("x"), Model.RAT),
                     normalize(parse("1/x"), Model.RAT))
    assert product == PointwiseNF(P_ONE, P_ONE, ((Fraction(0), Fraction(0)),))


def test_nf_mul_rejects_model_mismatch():
    with pytest.raises(TypeError):
        nf_mul(normalize(parse("x"), Model.RAT),
               normalize(parse("x"), Model.COMPLEX))


def test_nf_neg_involution_and_example():
    nf = normalize(parse("x/x"), Model.RAT)
    assert nf_neg(nf_neg(nf)) == nf
    negated = nf_neg(nf)
    assert negated.num == Poly((-1,))
    assert negated.exceptions == ((Fraction(0), Fraction(0)),)
    zero = normalize(parse("0"), Model.RAT)
    assert nf_neg(zero) == zero


def test_nf_inv_of_x():
    inv = nf_inv(normalize(parse("x"), Model.RAT))
    assert inv == PointwiseNF(P_ONE, X, ())


def test_nf_inv_involution_property():
    rng = random.Random(31)
    for _ in range(200):
        t = random_term(rng, depth=4)
        for model in Model:
            nf = normalize(t, model)
            assert nf_inv(nf_inv(nf)) == nf


def test_nf_inv_fixes_x_over_x():
    nf = normalize(parse("x/x"), Model.RAT)
    assert nf_inv(nf) == nf


def test_nf_eval_example2():
    nf = normalize(parse(EXAMPLE2), Model.RAT)
    assert nf_eval(nf, Fraction(0)) == Fraction(33, 7)
    # generic point
    assert nf_eval(nf, Fraction(1)) == eval_term(parse(EXAMPLE2), Fraction(1))


def test_nf_eval_complex_at_rational_points():
    nf = normalize(parse("x/x"), Model.COMPLEX)
    assert nf_eval(nf, Fraction(0)) == 0
    assert nf_eval(nf, Fraction(5)) == 1


def test_den_normalization_invariants():
    rng = random.Random(32)
    for _ in range(100):
        t = random_term(rng, depth=5)
        for model in Model:
            nf = normalize(t, model)
            assert not nf.den.is_zero()
            assert nf.den.lead > 0
            assert nf.den == nf.den.primitive()
            if nf.num.is_zero():
                assert nf.den == P_ONE
            from meadows.poly import poly_gcd

            assert poly_gcd(nf.num, nf.den) == P_ONE or nf.num.is_zero()


def test_correction_invariants():
    rng = random.Random(33)
    for _ in range(60):
        t = random_term(rng, depth=5)
        nf = normalize(t, Model.COMPLEX)
        loci = [r for r, _ in nf.corrections]
        assert len(set(loci)) == len(loci)
        for r, s in nf.corrections:
            assert r == r.primitive() and r.lead > 0
            assert s.is_zero() or s.degree < r.degree
            # locus irreducibility: evaluating the term modulo r succeeds
            assert eval_term_mod(t, r) == s


def test_soundness_spec_scale():
    assert check_nf_soundness(seed=34, rounds=1000, points=25).ok


def test_homomorphism_property():
    assert check_nf_homomorphism(seed=35, rounds=200).ok


def test_canonicity_property():
    assert check_nf_canonicity(seed=36, rounds=100).ok


def test_minimality_property():
    assert check_nf_minimality(seed=37, rounds=300).ok


def test_model_refinement_property():
    assert check_model_refinement(seed=38, rounds=200).ok


def test_desugaring_soundness_property():
    assert check_desugar(seed=39, rounds=100).ok


def test_json_serialization_shapes():
    nf_q = normalize(parse("1/x + 1/1"), Model.RAT)
    d = nf_q.to_json_dict()
    assert d == {
        "num": ["1", "1"],
        "den": ["0", "1"],
        "exceptions": [{"point": "0", "value": "1"}],
    }
    nf_c = normalize(parse("1/(x^2-2) + 1/1"), Model.COMPLEX)
    d = nf_c.to_json_dict()
    assert d["corrections"] == [{"locus": ["-2", "0", "1"], "value": ["1"]}]
