"""Operators on Laurent polynomials: substitutions, divided differences, T0/T1, D.

Everything here acts exactly.  The building blocks are two involutions,

    s1 : z -> 1/z          s0 : z -> q/z,

whose composites are the q-shifts s1 s0 : z -> q z and s0 s1 : z -> z/q.
On top of them sit two operators T0, T1 of the form t + r(z)(s - 1) with
rational coefficients r chosen so each satisfies the quadratic relation
(T - t)(T + 1) = 0, a second-order q-difference operator D acting on
symmetric polynomials, a one-sided variant of D acting on everything,
and the composite Y = T1 T0 whose eigenfunctions the polynomial layer
constructs.

Each application assembles the rational expression as a LaurentFraction
and performs a single exact division at the end.  The divisions are exact
because s f - f always vanishes on the fixed locus of the involution s,
which is where the denominators vanish too; a nonzero remainder would mean
the operator was fed an input outside its domain and surfaces as
NotDivisibleError rather than a silently wrong answer.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .laurent import (
    SUB_INV,
    SUB_Q_OVER_Z,
    SUB_QZ,
    SUB_Z_OVER_Q,
    LaurentFraction,
    LaurentPoly,
)
from .scalars import ParamSet


class NotSymmetricError(ValueError):
    """An operator defined only on symmetric polynomials got an asymmetric input."""


def s1(f: LaurentPoly) -> LaurentPoly:
    """Substitute z -> 1/z."""
    return f.substitute(SUB_INV)


def s0(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """Substitute z -> q/z."""
    return f.substitute(SUB_Q_OVER_Z, p.q)


def shift_q(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """Substitute z -> q*z."""
    return f.substitute(SUB_QZ, p.q)


def shift_q_inv(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """Substitute z -> z/q."""
    return f.substitute(SUB_Z_OVER_Q, p.q)


@lru_cache(maxsize=None)
def r1_fraction(p: ParamSet) -> LaurentFraction:
    """Coefficient (1 - a z)(1 - b z) / (1 - z^2) in front of (s1 - 1)."""
    z = LaurentPoly.monomial(1)
    num = (1 - p.a * z) * (1 - p.b * z)
    den = 1 - z * z
    return LaurentFraction(num, den)


@lru_cache(maxsize=None)
def r0_fraction(p: ParamSet) -> LaurentFraction:
    """Coefficient (z - c)(z - d) / (z^2 - q) in front of (s0 - 1)."""
    z = LaurentPoly.monomial(1)
    num = (z - p.c) * (z - p.d)
    den = z * z - p.q
    return LaurentFraction(num, den)


@lru_cache(maxsize=None)
def aw_fraction(p: ParamSet) -> LaurentFraction:
    """Coefficient (1-az)(1-bz)(1-cz)(1-dz) / ((1-z^2)(1-q z^2)) of D."""
    z = LaurentPoly.monomial(1)
    num = (1 - p.a * z) * (1 - p.b * z) * (1 - p.c * z) * (1 - p.d * z)
    den = (1 - z * z) * (1 - p.q * z * z)
    return LaurentFraction(num, den)


def apply_T1(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """T1 f = t1 f + r1(z) (f(1/z) - f(z)), with t1 = -ab."""
    r = r1_fraction(p)
    delta = s1(f) - f
    return f.scale(p.t1) + LaurentFraction(r.num * delta, r.den).reduce()


def apply_T0(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """T0 f = t0 f + r0(z) (f(q/z) - f(z)), with t0 = -cd/q."""
    r = r0_fraction(p)
    delta = s0(f, p) - f
    return f.scale(p.t0) + LaurentFraction(r.num * delta, r.den).reduce()


def apply_t1_T1_inv(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """t1 T1^{-1} f = (T1 - t1 + 1) f, read off from the quadratic relation."""
    return apply_T1(f, p) + f.scale(1 - p.t1)


def apply_t0_T0_inv(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """t0 T0^{-1} f = (T0 - t0 + 1) f, read off from the quadratic relation."""
    return apply_T0(f, p) + f.scale(1 - p.t0)


def apply_Y(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """Y f = T1 T0 f."""
    return apply_T1(apply_T0(f, p), p)


def apply_D(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """Second-order q-difference operator on symmetric Laurent polynomials.

    D f = A(z) (f(qz) - f(z)) + A(1/z) (f(z/q) - f(z)) with A = aw_fraction.
    Neither summand is polynomial on its own; the sum is, provided f is
    symmetric, so the two terms are combined over a common denominator
    before the one exact division.
    """
    if not f.is_symmetric():
        raise NotSymmetricError("D is defined on symmetric polynomials only")
    A = aw_fraction(p)
    A_inv = A.substitute(SUB_INV)
    fr = A * (shift_q(f, p) - f) + A_inv * (shift_q_inv(f, p) - f)
    return fr.reduce()


def apply_D_prime(
    f: LaurentPoly, p: ParamSet, form: str = "factored"
) -> LaurentPoly:
    """One-sided relative of D, defined on all Laurent polynomials.

    form "factored" computes (T1 + 1)(T0 - t0) f.  form "direct" computes
    A(z)(f(qz) - f(1/z)) + A(1/z)(f(q/z) - f(z)), which agrees with the
    factored form identically; keeping both routes lets the verifier compare
    them rather than trusting either one.
    """
    if form == "factored":
        g = apply_T0(f, p) - f.scale(p.t0)
        return apply_T1(g, p) + g
    if form == "direct":
        A = aw_fraction(p)
        A_inv = A.substitute(SUB_INV)
        sf = s1(f)
        fr = A * (shift_q(f, p) - sf) + A_inv * (shift_q_inv(sf, p) - f)
        return fr.reduce()
    raise ValueError(f"unknown form {form!r}; expected 'factored' or 'direct'")
