"""Sparse exact Laurent polynomials in one variable z, and fractions of them.

A LaurentPoly is an immutable map from integer degree to nonzero Fraction.
The four substitutions used by the operator layer act monomial-wise:

    z -> q*z :  z^k -> q^k z^k          z -> 1/z :  z^k -> z^-k
    z -> z/q :  z^k -> q^-k z^k         z -> q/z :  z^k -> q^k z^-k

LaurentFraction is a deliberately unreduced quotient num/den.  It is never
simplified by GCD; equality is decided by cross-multiplication and `reduce`
performs one exact division at the end of an operator application.  A nonzero
remainder there is an invariant violation, reported as NotDivisibleError.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .scalars import Scalar, format_scalar, parse_scalar

SUB_QZ = "q*z"
SUB_Z_OVER_Q = "z/q"
SUB_INV = "1/z"
SUB_Q_OVER_Z = "q/z"

_ZERO = Fraction(0)


class NotDivisibleError(ArithmeticError):
    """Exact Laurent division left a nonzero remainder."""

    def __init__(self, remainder: "LaurentPoly"):
        super().__init__(f"division leaves nonzero remainder {remainder}")
        self.remainder = remainder


class _BothZero:
    __slots__ = ()

    def __repr__(self) -> str:
        return "BOTH_ZERO"


#: Returned by `proportional` when both arguments are the zero polynomial,
#: so every scalar works and none is distinguished.
BOTH_ZERO = _BothZero()


class LaurentPoly:
    """Immutable sparse Laurent polynomial {degree: coefficient}."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Scalar | int] | None = None):
        d: dict[int, Fraction] = {}
        if coeffs:
            for k, v in coeffs.items():
                if type(v) is not Fraction:
                    v = Fraction(v)
                if v:
                    d[int(k)] = v
        self._coeffs = d

    @classmethod
    def _raw(cls, d: dict[int, Fraction]) -> "LaurentPoly":
        # internal fast path: d must already be canonical (no zero values)
        self = object.__new__(cls)
        self._coeffs = d
        return self

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: Fraction(1)})

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "LaurentPoly":
        return cls({degree: coeff})

    def coeff(self, degree: int) -> Fraction:
        return self._coeffs.get(degree, _ZERO)

    def items(self) -> list[tuple[int, Fraction]]:
        """(degree, coefficient) pairs in increasing degree order."""
        return sorted(self._coeffs.items())

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def min_deg(self) -> int | None:
        return min(self._coeffs) if self._coeffs else None

    @property
    def max_deg(self) -> int | None:
        return max(self._coeffs) if self._coeffs else None

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -v for k, v in self._coeffs.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self._coeffs)
        for k, v in other._coeffs.items():
            s = d.get(k)
            if s is None:
                d[k] = v
            else:
                s = s + v
                if s:
                    d[k] = s
                else:
                    del d[k]
        return LaurentPoly._raw(d)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for k1, v1 in self._coeffs.items():
            for k2, v2 in other._coeffs.items():
                k = k1 + k2
                s = out.get(k)
                out[k] = v1 * v2 if s is None else s + v1 * v2
        return LaurentPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return LaurentPoly.zero()
        return LaurentPoly._raw({k: v * c for k, v in self._coeffs.items()})

    def substitute(self, rule: str, q: Scalar | None = None) -> "LaurentPoly":
        """Apply one of the monomial-wise substitutions named above."""
        if rule == SUB_INV:
            return LaurentPoly._raw({-k: v for k, v in self._coeffs.items()})
        if q is None:
            raise ValueError(f"substitution {rule!r} needs the scalar q")
        q = Fraction(q)
        if q == 0:
            raise ValueError("substitution needs q != 0")
        if rule == SUB_QZ:
            return LaurentPoly._raw({k: v * q**k for k, v in self._coeffs.items()})
        if rule == SUB_Z_OVER_Q:
            return LaurentPoly._raw({k: v * q**-k for k, v in self._coeffs.items()})
        if rule == SUB_Q_OVER_Z:
            return LaurentPoly._raw({-k: v * q**k for k, v in self._coeffs.items()})
        raise ValueError(f"unknown substitution rule {rule!r}")

    def is_symmetric(self) -> bool:
        """True when the polynomial is invariant under z -> 1/z."""
        return all(self._coeffs.get(-k) == v for k, v in self._coeffs.items())

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for k, v in sorted(self._coeffs.items(), reverse=True):
            if k == 0:
                term = format_scalar(v)
            else:
                zs = "z" if k == 1 else f"z^{k}"
                if v == 1:
                    term = zs
                elif v == -1:
                    term = f"-{zs}"
                else:
                    term = f"{format_scalar(v)}*{zs}"
            parts.append(term)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    def to_json_dict(self) -> dict:
        return {
            "var": "z",
            "coeffs": {str(k): format_scalar(v) for k, v in self.items()},
        }

    @classmethod
    def from_json_dict(cls, doc: dict) -> "LaurentPoly":
        if doc.get("var") != "z":
            raise ValueError(f"expected a polynomial in z, got {doc.get('var')!r}")
        return cls({int(k): parse_scalar(v) for k, v in doc["coeffs"].items()})


def exact_quotient(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """The h with h * den == num; NotDivisibleError when none exists."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero()
    rem = dict(num._coeffs)
    out: dict[int, Fraction] = {}
    d_items = list(den._coeffs.items())
    d_max = den.max_deg
    d_lead = den.coeff(d_max)
    # an exact quotient cannot reach below this exponent
    min_exp = num.min_deg - den.min_deg
    while rem:
        r_max = max(rem)
        k = r_max - d_max
        if k < min_exp:
            raise NotDivisibleError(LaurentPoly(rem))
        c = rem[r_max] / d_lead
        out[k] = c
        for dk, dv in d_items:
            key = dk + k
            nv = rem.get(key, _ZERO) - c * dv
            if nv:
                rem[key] = nv
            elif key in rem:
                del rem[key]
    return LaurentPoly._raw(out)


def proportional(f: LaurentPoly, g: LaurentPoly):
    """The scalar c with f == c*g, if one exists.

    Returns BOTH_ZERO when f and g both vanish, the Fraction c (possibly 0)
    when it is determined, and None when f is not a multiple of g.
    """
    if g.is_zero():
        return BOTH_ZERO if f.is_zero() else None
    if f.is_zero():
        return Fraction(0)
    ref = g.max_deg
    c = f.coeff(ref) / g.coeff(ref)
    return c if (f - g.scale(c)).is_zero() else None


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a Laurent polynomial")


class LaurentFraction:
    """Unreduced quotient of Laurent polynomials with a nonzero denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = LaurentPoly.one() if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("fraction with zero denominator")
        self.num = num
        self.den = den

    def __neg__(self) -> "LaurentFraction":
        return LaurentFraction(-self.num, self.den)

    def __add__(self, other) -> "LaurentFraction":
        if not isinstance(other, LaurentFraction):
            other = LaurentFraction(other)
        if self.den == other.den:
            return LaurentFraction(self.num + other.num, self.den)
        return LaurentFraction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentFraction":
        if not isinstance(other, LaurentFraction):
            other = LaurentFraction(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentFraction":
        return (-self) + other

    def __mul__(self, other) -> "LaurentFraction":
        if not isinstance(other, LaurentFraction):
            other = LaurentFraction(other)
        return LaurentFraction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def substitute(self, rule: str, q: Scalar | None = None) -> "LaurentFraction":
        return LaurentFraction(
            self.num.substitute(rule, q), self.den.substitute(rule, q)
        )

    def reduce(self) -> LaurentPoly:
        """Exact division of num by den."""
        return exact_quotient(self.num, self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = LaurentFraction(other)
        if not isinstance(other, LaurentFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"LaurentFraction(({self.num}) / ({self.den}))"


def limit_at_infinity(fr: LaurentFraction) -> Scalar:
    """Limit of the fraction as z grows without bound.

    Zero when the numerator's top degree is below the denominator's, the
    ratio of leading coefficients when they match; diverging fractions are
    a ValueError.
    """
    if fr.num.is_zero():
        return Fraction(0)
    n_top, d_top = fr.num.max_deg, fr.den.max_deg
    if n_top < d_top:
        return Fraction(0)
    if n_top > d_top:
        raise ValueError("fraction diverges as z -> infinity")
    return fr.num.coeff(n_top) / fr.den.coeff(d_top)
