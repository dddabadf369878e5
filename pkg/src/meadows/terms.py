"""Term language of divisive meadows: signature {0, 1, -, +, *, /}.

Terms are immutable ASTs over a single variable.  There is exactly one
variable node (``Var``), so every term is univariate by construction; the
parser accepts any identifier but canonicalizes it to that node.  Integer
literals and natural-number powers are definable sugar: ``IntLit(n)`` stands
for the n-fold sum of 1 (negated for n < 0), ``Pow(t, n)`` for the n-fold
product.  ``desugar`` removes both without changing the denoted function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Term:
    """Base class for term nodes.  Instances are immutable and hashable."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_term(self)


@dataclass(frozen=True, slots=True)
class Zero(Term):
    pass


@dataclass(frozen=True, slots=True)
class One(Term):
    pass


@dataclass(frozen=True, slots=True)
class IntLit(Term):
    value: int


@dataclass(frozen=True, slots=True)
class Var(Term):
    pass


@dataclass(frozen=True, slots=True)
class Neg(Term):
    arg: Term


@dataclass(frozen=True, slots=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Mul(Term):
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Div(Term):
    num: Term
    den: Term


@dataclass(frozen=True, slots=True)
class Pow(Term):
    base: Term
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError("power sugar requires a nonnegative exponent")


ZERO = Zero()
ONE = One()
X = Var()


class TermClass(enum.Enum):
    """Syntactic shape of a term.

    A fraction is a term whose head symbol is division.  A simple fraction
    has no further division in either argument; it is closed when no
    variable occurs.  A polynomial contains division only inside closed
    simple fractions.  A mixed fraction is a sum of a polynomial and a
    simple fraction.
    """

    SIMPLE_FRACTION = "simple-fraction"
    CLOSED_SIMPLE_FRACTION = "closed-simple-fraction"
    POLYNOMIAL = "polynomial"
    MIXED_FRACTION = "mixed-fraction"
    FRACTION = "fraction"
    OTHER = "other"


class TermSyntaxError(ValueError):
    """Raised on malformed input; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# Structural utilities


def contains_var(t: Term) -> bool:
    match t:
        case Var():
            return True
        case Neg(a) | Pow(a, _):
            return contains_var(a)
        case Add(a, b) | Mul(a, b) | Div(a, b):
            return contains_var(a) or contains_var(b)
        case _:
            return False


def contains_div(t: Term) -> bool:
    match t:
        case Div():
            return True
        case Neg(a) | Pow(a, _):
            return contains_div(a)
        case Add(a, b) | Mul(a, b):
            return contains_div(a) or contains_div(b)
        case _:
            return False


def is_simple_fraction(t: Term) -> bool:
    return isinstance(t, Div) and not contains_div(t.num) and not contains_div(t.den)


def is_polynomial(t: Term) -> bool:
    """True when every division in t is a closed simple fraction."""
    match t:
        case Div(a, b):
            return not (
                contains_div(a) or contains_div(b) or contains_var(a) or contains_var(b)
            )
        case Neg(a) | Pow(a, _):
            return is_polynomial(a)
        case Add(a, b) | Mul(a, b):
            return is_polynomial(a) and is_polynomial(b)
        case _:
            return True


def classify(t: Term) -> TermClass:
    """Most specific TermClass of t.

    Division-headed terms are fractions (simple/closed-simple when the
    arguments are division-free).  Among sums, the mixed-fraction shape
    takes precedence over the polynomial shape so that emitted output
    always reports as a mixed fraction.
    """
    if isinstance(t, Div):
        if is_simple_fraction(t):
            if not contains_var(t):
                return TermClass.CLOSED_SIMPLE_FRACTION
            return TermClass.SIMPLE_FRACTION
        return TermClass.FRACTION
    if isinstance(t, Add) and is_polynomial(t.left) and is_simple_fraction(t.right):
        return TermClass.MIXED_FRACTION
    if is_polynomial(t):
        return TermClass.POLYNOMIAL
    return TermClass.OTHER


def desugar(t: Term) -> Term:
    """Expand IntLit into repeated sums of 1 and Pow into repeated products."""
    match t:
        case IntLit(n):
            if n == 0:
                return ZERO
            unit = ONE
            acc: Term = unit
            for _ in range(abs(n) - 1):
                acc = Add(acc, unit)
            return Neg(acc) if n < 0 else acc
        case Pow(base, n):
            if n == 0:
                return ONE
            b = desugar(base)
            acc = b
            for _ in range(n - 1):
                acc = Mul(acc, b)
            return acc
        case Neg(a):
            return Neg(desugar(a))
        case Add(a, b):
            return Add(desugar(a), desugar(b))
        case Mul(a, b):
            return Mul(desugar(a), desugar(b))
        case Div(a, b):
            return Div(desugar(a), desugar(b))
        case _:
            return t


# ---------------------------------------------------------------------------
# Parsing
#
# expr  := sum
# sum   := prod (("+"|"-") prod)*
# prod  := unary (("*"|"·") unary | "/" unary)*
# unary := "-" unary | atom ("^" natural)?
# atom  := natural | identifier | "(" expr ")"

_MUL_CHARS = {"*", "·"}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.var_name: str | None = None

    def error(self, message: str) -> TermSyntaxError:
        return TermSyntaxError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def parse(self) -> Term:
        t = self.sum()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return t

    def sum(self) -> Term:
        t = self.prod()
        while True:
            c = self.peek()
            if c == "+":
                self.pos += 1
                t = Add(t, self.prod())
            elif c == "-":
                self.pos += 1
                t = Add(t, Neg(self.prod()))
            else:
                return t

    def prod(self) -> Term:
        t = self.unary()
        while True:
            c = self.peek()
            if c in _MUL_CHARS:
                self.pos += 1
                t = Mul(t, self.unary())
            elif c == "/":
                self.pos += 1
                t = Div(t, self.unary())
            else:
                return t

    def unary(self) -> Term:
        if self.peek() == "-":
            self.pos += 1
            return Neg(self.unary())
        t = self.atom()
        if self.peek() == "^":
            self.pos += 1
            t = Pow(t, self.natural())
        return t

    def natural(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a natural number")
        return int(self.text[start : self.pos])

    def atom(self) -> Term:
        c = self.peek()
        if c == "(":
            self.pos += 1
            t = self.sum()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return t
        if c.isdigit():
            n = self.natural()
            if n == 0:
                return ZERO
            if n == 1:
                return ONE
            return IntLit(n)
        if c.isalpha() or c == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start : self.pos]
            if self.var_name is None:
                self.var_name = name
            elif name != self.var_name:
                self.pos = start
                raise self.error(
                    f"multiple variables: {self.var_name!r} and {name!r}"
                )
            return X
        if c == "":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {c!r}")


def parse(text: str) -> Term:
    """Parse a univariate meadow term.

    Whitespace-insensitive; both ``*`` and the middle dot are accepted for
    multiplication; ``^`` takes a nonnegative decimal exponent; any single
    identifier may serve as the variable.  Raises TermSyntaxError on
    malformed input or when two distinct identifiers occur.
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Printing.  Precedence mirrors the grammar so parse(format_term(t))
# reconstructs t; parentheses are inserted only where re-parsing would
# otherwise change the tree.

_PREC_SUM = 1
_PREC_PROD = 2
_PREC_UNARY = 3
_PREC_ATOM = 4


def _fmt(t: Term, prec: int) -> str:
    match t:
        case Zero():
            return "0"
        case One():
            return "1"
        case Var():
            return "x"
        case IntLit(n):
            return str(n) if n >= 0 else _wrap(f"-{-n}", _PREC_UNARY, prec)
        case Neg(a):
            return _wrap("-" + _fmt(a, _PREC_UNARY), _PREC_UNARY, prec)
        case Add(a, Neg(b)):
            s = f"{_fmt(a, _PREC_SUM)} - {_fmt(b, _PREC_SUM + 1)}"
            return _wrap(s, _PREC_SUM, prec)
        case Add(a, b):
            s = f"{_fmt(a, _PREC_SUM)} + {_fmt(b, _PREC_SUM + 1)}"
            return _wrap(s, _PREC_SUM, prec)
        case Mul(a, b):
            s = f"{_fmt(a, _PREC_PROD)}*{_fmt(b, _PREC_PROD + 1)}"
            return _wrap(s, _PREC_PROD, prec)
        case Div(a, b):
            s = f"{_fmt(a, _PREC_PROD)}/{_fmt(b, _PREC_PROD + 1)}"
            return _wrap(s, _PREC_PROD, prec)
        case Pow(a, n):
            return _wrap(f"{_fmt(a, _PREC_ATOM)}^{n}", _PREC_UNARY, prec)
        case _:
            raise TypeError(f"not a term: {t!r}")


def _wrap(s: str, inner: int, outer: int) -> str:
    return f"({s})" if inner < outer else s


def format_term(t: Term) -> str:
    """Canonical text for a term; inverse of parse up to sugar for 0/1
    naturals and negative literals (which re-parse as Neg of a positive)."""
    return _fmt(t, _PREC_SUM)
