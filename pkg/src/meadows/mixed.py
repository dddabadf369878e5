"""Emission of mixed fractions from normal forms.

A mixed fraction is a standardized polynomial (integer numerators over one
common denominator) plus a simple fraction whose numerator and denominator
are integer-coefficient polynomials.  Emission rebuilds a term of exactly
that shape from a normal form:

* collect the exceptional support (points, or irreducible loci) together
  with the roots of the reduced denominator;
* build the patch polynomial g matching the term's value on that support:
  by Lagrange interpolation over the points in the rational model, by
  combining each locus residue with the inverse of the product of the other
  loci in the complex model;
* attach the support-product e so the fraction part vanishes exactly on the
  support, and scale by the polynomial's common denominator l (and a
  further integer L when rational coefficients remain) to reach integer
  coefficients.

The integer scalings performed are recorded multiplicatively in
``witness_n = l * L``: multiplying numerator and denominator of a fraction
by a positive integer n is justified by the single cancellation n/n = 1, so
the emitted equality holds in every meadow of characteristic zero in which
n is cancellable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .factor import distinct_irreducible_factors, rational_roots_from_factors
from .normalform import (
    AlgebraicNF,
    Model,
    NF,
    PointwiseNF,
    is_polynomial_nf,
    normalize,
)
from .poly import (
    P_ONE,
    P_ZERO,
    Poly,
    StdPoly,
    invert_mod,
    lagrange_interpolate,
    lagrange_weights,
    standardize,
)
from .rationals import Rat
from .terms import (
    Add,
    Div,
    IntLit,
    Mul,
    Neg,
    ONE,
    Pow,
    Term,
    X,
    ZERO,
    format_term,
)


@dataclass(frozen=True)
class IndicatorFraction:
    """Product of the support polynomials; stands for the term
    1 - locus/locus, which is 1 exactly on the roots of locus and 0
    elsewhere (for the empty support the locus is 1 and the term is 0)."""

    locus: Poly

    def to_term(self) -> Term:
        locus_term = _coeff_poly_term(self.locus.int_coeffs(), 1)
        return Add(ONE, Neg(Div(locus_term, locus_term)))

    def value_at(self, a: Rat) -> Fraction:
        return Fraction(1) if self.locus(a) == 0 else Fraction(0)


def build_indicator(items) -> IndicatorFraction:
    """Indicator for a set of rational points (each contributing x - a) or
    a collection of locus polynomials, normalized to integer coefficients."""
    locus = P_ONE
    for item in items:
        if isinstance(item, Poly):
            if item.is_zero():
                raise ValueError("indicator loci must be nonzero")
            locus = locus * item
        else:
            locus = locus * Poly((-Fraction(item), 1))
    if locus != P_ONE:
        locus = locus.primitive()
    return IndicatorFraction(locus)


@dataclass(frozen=True)
class PointTarget:
    """Support point of a rational-model emission: the input's value there
    and the weight of its node product in the patch polynomial."""

    point: Rat
    value: Rat
    weight: Rat


@dataclass(frozen=True)
class LocusTarget:
    """Support locus of a complex-model emission: the input's residue on
    the locus and the residue multiplying the complement product in the
    patch polynomial."""

    locus: Poly
    value: Poly
    coefficient: Poly


@dataclass(frozen=True)
class MixedFraction:
    """Standardized polynomial part plus integer simple fraction part.

    ``witness_n`` is positive and divisible by the polynomial part's common
    denominator; it records every integer scaling used, so n/n = 1 suffices
    to justify the transformation equationally.  ``targets`` carries the
    emission diagnostics and does not take part in equality.
    """

    poly: StdPoly
    frac_num: Poly
    frac_den: Poly
    witness_n: int
    targets: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.frac_den.is_zero():
            raise ValueError("fraction denominator must be nonzero")
        if self.witness_n <= 0 or self.witness_n % self.poly.denominator:
            raise ValueError("witness must be a positive multiple of the "
                             "common denominator")


class EmissionError(AssertionError):
    """The emitted mixed fraction failed its own round-trip check."""


def _emit_from_parts(
    nf: NF, g: Poly, support_locus: Poly, targets: tuple
) -> MixedFraction:
    std = standardize(g)
    l = std.denominator
    g_int = Poly(std.numerators)  # l * g, integer coefficients
    fn = nf.num * support_locus.scale(l) - nf.den * (support_locus * g_int)
    fd = (nf.den * support_locus).scale(l)
    scale = 1
    for c in fn.coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return MixedFraction(std, fn.scale(scale), fd.scale(scale), l * scale, targets)


def _emit_polynomial(nf: NF) -> MixedFraction:
    std = standardize(nf.num)
    return MixedFraction(std, P_ZERO, P_ONE, std.denominator, ())


def emit_mixed_q(nf: PointwiseNF, check: bool = False) -> MixedFraction:
    """Mixed fraction semantically equal to nf on the rational meadow.

    The support is the exception points together with the rational roots of
    the denominator; targets are the stored exception values and 0 at
    uncorrected roots.  The patch polynomial interpolates the targets, and
    the fraction part (num*e*l - den*e*(l*g)) / (den*e*l) restores the
    reduced base off the support while vanishing on it.
    """
    if is_polynomial_nf(nf):
        return _emit_polynomial(nf)
    values = dict(nf.exceptions)
    support = sorted(set(values) | set(rational_roots_from_factors(nf.den)))
    points = [(a, values.get(a, Fraction(0))) for a in support]
    weights = lagrange_weights(points)
    g = lagrange_interpolate(points)
    e = build_indicator(support).locus
    targets = tuple(
        PointTarget(a, v, w) for (a, v), w in zip(points, weights)
    )
    mf = _emit_from_parts(nf, g, e, targets)
    if check and normalize(to_term(mf), Model.RAT) != nf:
        raise EmissionError("rational-model emission failed round-trip")
    return mf


def emit_mixed_c(nf: AlgebraicNF, check: bool = False) -> MixedFraction:
    """Mixed fraction semantically equal to nf on the complex meadow.

    The support is the correction loci together with the irreducible
    factors of the denominator.  For each locus r with target residue v the
    patch polynomial receives h_r * (v * h_r^{-1} mod r), where h_r is the
    product of the other loci (invertible modulo r since distinct
    irreducibles share no roots); the sum then has residue v on every
    locus.  The fraction part is assembled as in the rational model.
    """
    if is_polynomial_nf(nf):
        return _emit_polynomial(nf)
    values = dict(nf.corrections)
    loci = sorted(
        set(values) | set(distinct_irreducible_factors(nf.den)),
        key=lambda r: (len(r.coeffs), r.coeffs),
    )
    g = P_ZERO
    targets = []
    for r in loci:
        v = values.get(r, P_ZERO)
        h = P_ONE
        for other in loci:
            if other != r:
                h = h * other
        if v.is_zero():
            coeff = P_ZERO
        else:
            coeff = (v * invert_mod(h % r, r)) % r
        g = g + h * coeff
        targets.append(LocusTarget(r, v, coeff))
    e = build_indicator(loci).locus
    mf = _emit_from_parts(nf, g, e, tuple(targets))
    if check and normalize(to_term(mf), Model.COMPLEX) != nf:
        raise EmissionError("complex-model emission failed round-trip")
    return mf


def emit(nf: NF, check: bool = False) -> MixedFraction:
    """Model-dispatching emission."""
    if isinstance(nf, PointwiseNF):
        return emit_mixed_q(nf, check=check)
    return emit_mixed_c(nf, check=check)


def emit_with_witness(t: Term) -> tuple[MixedFraction, int]:
    """Normalize over the complex model, emit, and return the witness n.

    The semantic equality t = g + f holds in the complex meadow (and hence
    in every meadow of characteristic zero satisfying n/n = 1); n collects
    the common denominator l and every additional integer scaling used
    while clearing coefficients.  Formal derivability is not re-proved
    here, only the semantic content is produced and checkable.
    """
    mf = emit_mixed_c(normalize(t, Model.COMPLEX))
    return mf, mf.witness_n


# ---------------------------------------------------------------------------
# Term rendering


def _literal(n: int) -> Term:
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    return IntLit(n)


def _coeff_poly_term(numerators, denominator: int) -> Term:
    """Term displaying sum(numerators[i]/denominator * x^i), highest power
    first, coefficients as integer literals or closed simple fractions."""
    parts = []
    for i in range(len(numerators) - 1, -1, -1):
        r = numerators[i]
        if r == 0:
            continue
        negative = r < 0
        mag = abs(r)
        if denominator == 1:
            coeff: Term | None = None if mag == 1 and i > 0 else _literal(mag)
        else:
            coeff = Div(_literal(mag), _literal(denominator))
        if i == 0:
            body = coeff if coeff is not None else ONE
        else:
            xpow: Term = X if i == 1 else Pow(X, i)
            body = xpow if coeff is None else Mul(coeff, xpow)
        parts.append((negative, body))
    if not parts:
        return ZERO
    negative, body = parts[0]
    acc: Term = Neg(body) if negative else body
    for negative, body in parts[1:]:
        acc = Add(acc, Neg(body) if negative else body)
    return acc


def to_term(mf: MixedFraction) -> Term:
    """Term of the emitted mixed fraction: polynomial part plus the simple
    fraction, classifying as a mixed fraction."""
    poly_part = _coeff_poly_term(mf.poly.numerators, mf.poly.denominator)
    num_part = _coeff_poly_term(mf.frac_num.int_coeffs(), 1)
    den_part = _coeff_poly_term(mf.frac_den.int_coeffs(), 1)
    return Add(poly_part, Div(num_part, den_part))


def mixed_to_json_dict(mf: MixedFraction, model: Model) -> dict:
    """Wire format for a mixed fraction (all numbers as decimal strings)."""
    return {
        "model": "Q" if model is Model.RAT else "C",
        "g": {
            "numerators": [str(r) for r in mf.poly.numerators],
            "denominator": str(mf.poly.denominator),
        },
        "f": {
            "num": [str(c) for c in mf.frac_num.int_coeffs()],
            "den": [str(c) for c in mf.frac_den.int_coeffs()],
        },
        "witness_n": str(mf.witness_n),
        "term": format_term(to_term(mf)),
    }
