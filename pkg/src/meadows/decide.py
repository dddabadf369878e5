"""Decision procedures over canonical normal forms.

Because normal forms are canonical (structural equality coincides with
semantic equality on the model), equality of two terms is decided by
normalizing both sides.  Simple-fraction expressibility over the rationals
holds exactly when every exceptional value is 0, in which case multiplying
the reduced base through by the support product exhibits the fraction.
Finite-support summation reduces to the normal form as well: a nonzero
reduced base is nonzero at all but finitely many arguments, so the support
is infinite and the sum is 0 by convention; otherwise the support lies in
the exceptional set and the sum is computed exactly, over root loci via
Newton-identity trace sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .mixed import _coeff_poly_term, build_indicator
from .normalform import (
    Model,
    NF,
    PointwiseNF,
    eval_closed,
    normalize,
)
from .poly import Poly, trace_sum
from .rationals import Rat
from .terms import Div, Term


def decide_eq(s: Term, t: Term, model: Model) -> bool:
    """True iff s and t denote the same function on the model's carrier."""
    return normalize(s, model) == normalize(t, model)


@dataclass(frozen=True)
class PointWitness:
    """Rational point where the two sides take different values."""

    point: Rat
    left: Rat
    right: Rat

    def to_json_dict(self) -> dict:
        return {
            "kind": "point",
            "point": str(self.point),
            "left": str(self.left),
            "right": str(self.right),
        }


@dataclass(frozen=True)
class LocusWitness:
    """Irreducible locus on whose roots the two sides take different
    values (residues differ in the quotient ring)."""

    locus: Poly
    left: Poly
    right: Poly

    def to_json_dict(self) -> dict:
        return {
            "kind": "locus",
            "locus": [str(c) for c in self.locus.coeffs],
            "left": [str(c) for c in self.left.coeffs],
            "right": [str(c) for c in self.right.coeffs],
        }


def distinguishing_witness(s: Term, t: Term, model: Model):
    """Evidence for inequality: None when equal, else a point or locus
    witness with the two differing values."""
    nf1 = normalize(s, model)
    nf2 = normalize(t, model)
    if nf1 == nf2:
        return None
    if (nf1.num, nf1.den) != (nf2.num, nf2.den):
        return _base_witness(nf1, nf2)
    if isinstance(nf1, PointwiseNF):
        pts = {pt for pt, _ in nf1.exceptions} | {pt for pt, _ in nf2.exceptions}
        for pt in sorted(pts):
            v1, v2 = nf1.value_at(pt), nf2.value_at(pt)
            if v1 != v2:
                return PointWitness(pt, v1, v2)
    else:
        loci = {r for r, _ in nf1.corrections} | {r for r, _ in nf2.corrections}
        for r in sorted(loci, key=lambda r: (len(r.coeffs), r.coeffs)):
            s1, s2 = nf1.value_mod(r), nf2.value_mod(r)
            if s1 != s2:
                return LocusWitness(r, s1, s2)
    raise AssertionError("unequal normal forms must differ somewhere")


def _base_witness(nf1: NF, nf2: NF) -> PointWitness:
    # The reduced bases differ as rational functions, so they differ at
    # every rational point outside a finite bad set: roots of the cross
    # difference, of either denominator, and the exceptional support.
    diff = nf1.num * nf2.den - nf2.num * nf1.den
    k = 0
    while True:
        for a in (Fraction(k), Fraction(-k)):
            if diff(a) == 0 or nf1.den(a) == 0 or nf2.den(a) == 0:
                continue
            if _is_exceptional(nf1, a) or _is_exceptional(nf2, a):
                continue
            return PointWitness(a, nf1.value_at(a), nf2.value_at(a))
        k += 1


def _is_exceptional(nf: NF, a: Rat) -> bool:
    if isinstance(nf, PointwiseNF):
        return any(pt == a for pt, _ in nf.exceptions)
    return any(r(a) == 0 for r, _ in nf.corrections)


def simple_expressible(t: Term) -> Term | None:
    """A simple fraction equal to t on the rational meadow, or None.

    t equals a simple fraction iff every exceptional value of its normal
    form is 0: a simple fraction is discontinuous only at zeros of its
    denominator, where its value is 0.  When the criterion holds, the base
    multiplied through by the support product (x - a) over the zero-valued
    exception points realizes the fraction.
    """
    nf = normalize(t, Model.RAT)
    if any(v != 0 for _, v in nf.exceptions):
        return None
    w = build_indicator(pt for pt, _ in nf.exceptions).locus
    num = nf.num * w
    den = nf.den * w
    scale = 1
    for c in num.coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    num = num.scale(scale)
    den = den.scale(scale)
    return Div(
        _coeff_poly_term(num.int_coeffs(), 1), _coeff_poly_term(den.int_coeffs(), 1)
    )


@dataclass(frozen=True)
class SupportSum:
    """Result of finite-support summation: the exact sum when only
    finitely many arguments give a nonzero value, else 0 with the flag
    cleared."""

    value: Rat
    support_finite: bool

    def __post_init__(self):
        if not self.support_finite and self.value != 0:
            raise ValueError("infinite support forces the value 0")

    def to_json_dict(self) -> dict:
        return {"value": str(self.value), "support_finite": self.support_finite}


def finite_support_sum(t: Term, model: Model) -> SupportSum:
    """Sum of t(a) over all carrier points a when only finitely many are
    nonzero, and 0 otherwise.

    With a nonzero reduced base the function is nonzero outside a finite
    set, so the support is infinite.  With a zero base the support lies in
    the exceptional set: the sum is the sum of exception values over the
    rationals, or the trace-sum of each correction residue over its locus's
    complex roots.
    """
    nf = normalize(t, model)
    if not nf.num.is_zero():
        return SupportSum(Fraction(0), False)
    if isinstance(nf, PointwiseNF):
        total = sum((v for _, v in nf.exceptions), Fraction(0))
        return SupportSum(total, True)
    total = sum((trace_sum(s, r) for r, s in nf.corrections), Fraction(0))
    return SupportSum(total, True)


def sum_star_equals(t: Term, c: Term, model: Model) -> bool:
    """Whether the finite-support sum of t equals the closed term c."""
    return finite_support_sum(t, model).value == eval_closed(c)
