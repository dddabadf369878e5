import pytest

from meadows.terms import (
    Add,
    Div,
    IntLit,
    Mul,
    Neg,
    ONE,
    Pow,
    TermClass,
    TermSyntaxError,
    X,
    ZERO,
    classify,
    desugar,
    format_term,
    parse,
)


def test_parse_sum_of_fractions():
    assert parse("1/x + 1/1") == Add(Div(ONE, X), Div(ONE, ONE))


def test_parse_zero():
    assert parse("0") == ZERO


def test_parse_example_fraction():
    expected = Div(
        Add(Pow(X, 3), IntLit(2)),
        Add(Mul(IntLit(3), Pow(X, 2)), Neg(IntLit(7))),
    )
    assert parse("(x^3 + 2)/(3*x^2 - 7)") == expected


def test_parse_whitespace_and_middle_dot():
    assert parse(" 2 · x ") == parse("2*x")


def test_parse_any_identifier_becomes_the_variable():
    assert parse("y + 1") == Add(X, ONE)


def test_parse_rejects_two_variables():
    with pytest.raises(TermSyntaxError, match="multiple variables"):
        parse("x + y")


def test_parse_error_carries_position():
    with pytest.raises(TermSyntaxError) as excinfo:
        parse("1 + ")
    assert excinfo.value.position == 4


def test_parse_rejects_trailing_garbage():
    with pytest.raises(TermSyntaxError):
        parse("1 + 2)")


def test_unary_minus_binds_tighter_than_sum():
    assert parse("-x + 1") == Add(Neg(X), ONE)
    assert parse("-x^2") == Neg(Pow(X, 2))


def test_print_division_by_zero():
    assert format_term(Div(ONE, ZERO)) == "1/0"


def test_print_power():
    assert format_term(Pow(X, 5)) == "x^5"


def test_print_roundtrip_on_spec_example():
    t = parse("1/x + 1/1")
    assert format_term(t) == "1/x + 1/1"
    assert parse(format_term(t)) == t


@pytest.mark.parametrize(
    "text",
    [
        "x*(x + 1)",
        "-(x*x)",
        "x - (1 - x)",
        "(x + 1)^3/(2 - x^2)",
        "1/(1/(1/x))",
        "x - -3",
        "(-x)^2",
        "x/x/x",
        "x*(1/x)",
    ],
)
def test_roundtrip_needs_parentheses(text):
    t = parse(text)
    assert parse(format_term(t)) == t


def test_roundtrip_property_at_scale():
    from meadows.checks import check_roundtrip

    assert check_roundtrip(seed=7, rounds=300).ok


def test_roundtrip_on_desugared_terms():
    import random

    from meadows.generate import random_term

    rng = random.Random(8)
    for _ in range(100):
        t = desugar(random_term(rng, depth=5))
        assert parse(format_term(t)) == t


def test_desugar_literal_is_repeated_one():
    assert desugar(IntLit(3)) == Add(Add(ONE, ONE), ONE)
    assert desugar(IntLit(-2)) == Neg(Add(ONE, ONE))
    assert desugar(IntLit(0)) == ZERO


def test_desugar_power_is_repeated_product():
    assert desugar(Pow(X, 3)) == Mul(Mul(X, X), X)
    assert desugar(Pow(X, 0)) == ONE


def test_classify_simple_fraction():
    assert classify(parse("(1+x)/x")) is TermClass.SIMPLE_FRACTION


def test_classify_closed_simple_fraction():
    assert classify(parse("1/2")) is TermClass.CLOSED_SIMPLE_FRACTION


def test_classify_sum_of_fractions_is_other():
    # only division-headed terms are fractions; a sum of two simple
    # fractions is neither a fraction nor a polynomial
    assert classify(parse("1/x + 1/1")) is TermClass.OTHER


def test_classify_mixed_fraction():
    assert classify(parse("2*x^2 + 3 + (x+1)/(x^2+2)")) is TermClass.MIXED_FRACTION


def test_classify_polynomial():
    assert classify(parse("x^2 + 3*x")) is TermClass.POLYNOMIAL
    assert classify(parse("1/2*x^2 + 1/3*x")) is TermClass.POLYNOMIAL


def test_classify_nested_division_is_plain_fraction():
    assert classify(parse("(1/x)/x")) is TermClass.FRACTION


def test_classify_mixed_with_closed_fraction_part():
    # the mixed shape wins over the polynomial reading of p + c/d
    assert classify(parse("x + 1/2")) is TermClass.MIXED_FRACTION
