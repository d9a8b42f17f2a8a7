"""Exact rational scalars and the certified parameter points they live on.

Everything in this package is computed over `fractions.Fraction`, so equality
means equality and a zero residual is exactly the zero polynomial.  This
module owns parsing and formatting of rationals, the genericity conditions
G1..G6 that keep every downstream denominator nonzero, and the closed-form
scalar families attached to a parameter point: operator eigenvalues and the
coefficients of the raising and lowering relations.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction

Scalar = Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(?:/[1-9]\d*)?$")


class GenericityError(ValueError):
    """A parameter point violates one of the genericity conditions G1..G6."""

    def __init__(self, condition: str, detail: str):
        super().__init__(f"{condition}: {detail}")
        self.condition = condition
        self.detail = detail


class HorizonError(ValueError):
    """An index lies beyond the horizon a parameter set was certified for."""


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical rational form "p/q" (or plain "p").

    The denominator, when present, must be a positive integer literal, so
    floats, "1/-2", "1/0" and scientific notation are all rejected.
    """
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational in p/q form: {text!r}")
    return Fraction(s)


def format_scalar(x: Scalar | int) -> str:
    """Canonical string form: "p/q" in lowest terms, or "p" for integers."""
    return str(Fraction(x))


def _as_scalar(name: str, value) -> Scalar:
    if isinstance(value, float):
        raise TypeError(f"{name} must be an exact rational, not a float")
    return Fraction(value)


@dataclass(frozen=True)
class ParamSet:
    """A certified parameter point (q, a, b, c, d) with horizon n_max.

    Construct through `check_genericity`; the constructor itself only derives
    the deformation scalars t0 = -cd/q and t1 = -ab.  Instances are immutable
    and hashable, which the memo caches downstream rely on.
    """

    q: Scalar
    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar
    n_max: int
    t0: Scalar = field(init=False, compare=False, repr=False)
    t1: Scalar = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "t0", -self.c * self.d / self.q)
        object.__setattr__(self, "t1", -self.a * self.b)

    @property
    def abcd(self) -> Scalar:
        return self.a * self.b * self.c * self.d

    def require_horizon(self, n: int) -> None:
        if abs(n) > self.n_max:
            raise HorizonError(
                f"index {n} is beyond the certified horizon n_max={self.n_max}"
            )

    def as_json_dict(self) -> dict:
        return {
            "q": format_scalar(self.q),
            "a": format_scalar(self.a),
            "b": format_scalar(self.b),
            "c": format_scalar(self.c),
            "d": format_scalar(self.d),
            "nmax": self.n_max,
        }


def param_set_from_json(doc: dict) -> ParamSet:
    """Rebuild a certified ParamSet from its JSON form (re-runs the checks)."""
    vals = [parse_scalar(doc[k]) for k in ("q", "a", "b", "c", "d")]
    return check_genericity(*vals, int(doc["nmax"]))


def _mu_value(n: int, q: Scalar, abcd: Scalar) -> Scalar:
    if n < 0:
        return q**n
    return q ** (n - 1) * abcd


def _lambda_value(n: int, q: Scalar, abcd: Scalar) -> Scalar:
    m = abs(n)
    return (q**-m - 1) * (1 - abcd * q ** (m - 1))


def check_genericity(q, a, b, c, d, n_max: int) -> ParamSet:
    """Certify a parameter point, reporting the first violated condition.

    G1  q is not 0, 1 or -1 (with rational q this rules out all roots of 1).
    G2  a, b, c, d are nonzero.
    G3  abcd * q^j != 1 for 0 <= j <= 2*n_max + 2.
    G4  (xy) * q^j != 1 for every pair xy from {ab, ac, ad, bc, bd, cd} and
        0 <= j <= n_max.
    G5  the mu_n are pairwise distinct for -n_max-1 <= n <= n_max+1.
    G6  the lambda_n are pairwise distinct for 0 <= n <= n_max+1.
    """
    q = _as_scalar("q", q)
    named = {"a": _as_scalar("a", a), "b": _as_scalar("b", b),
             "c": _as_scalar("c", c), "d": _as_scalar("d", d)}
    n_max = int(n_max)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if q in (0, 1, -1):
        raise GenericityError("G1", f"q must avoid 0 and 1 and -1 (q={format_scalar(q)})")
    for name, v in named.items():
        if v == 0:
            raise GenericityError("G2", f"{name} must be nonzero")
    a, b, c, d = named["a"], named["b"], named["c"], named["d"]
    abcd = a * b * c * d
    for j in range(2 * n_max + 3):
        if abcd * q**j == 1:
            raise GenericityError("G3", f"abcd*q^{j} = 1")
    pairs = {"ab": a * b, "ac": a * c, "ad": a * d,
             "bc": b * c, "bd": b * d, "cd": c * d}
    for name, v in pairs.items():
        for j in range(n_max + 1):
            if v * q**j == 1:
                raise GenericityError("G4", f"{name}*q^{j} = 1")
    seen_mu: dict[Scalar, int] = {}
    for m in range(-(n_max + 1), n_max + 2):
        v = _mu_value(m, q, abcd)
        if v in seen_mu:
            raise GenericityError("G5", f"mu_{seen_mu[v]} = mu_{m} = {format_scalar(v)}")
        seen_mu[v] = m
    seen_lam: dict[Scalar, int] = {}
    for m in range(n_max + 2):
        v = _lambda_value(m, q, abcd)
        if v in seen_lam:
            raise GenericityError("G6", f"lambda_{seen_lam[v]} = lambda_{m} = {format_scalar(v)}")
        seen_lam[v] = m
    return ParamSet(q, a, b, c, d, n_max)


def q_pochhammer(x, k: int, q) -> Scalar:
    """(x; q)_k = prod_{j=0..k-1} (1 - x q^j), with the empty product 1."""
    if k < 0:
        raise ValueError("q_pochhammer needs k >= 0")
    x = Fraction(x)
    q = Fraction(q)
    acc = Fraction(1)
    power = Fraction(1)
    for _ in range(k):
        acc *= 1 - x * power
        power *= q
    return acc


def lambda_n(n: int, p: ParamSet) -> Scalar:
    """Eigenvalue of the q-difference operator on the degree-|n| symmetric
    polynomial: (q^-|n| - 1)(1 - abcd q^(|n|-1))."""
    return _lambda_value(n, p.q, p.abcd)


def mu_n(n: int, p: ParamSet) -> Scalar:
    """Eigenvalue of Y on the n-th nonsymmetric polynomial: q^n for n < 0 and
    q^(n-1) abcd for n >= 0."""
    return _mu_value(n, p.q, p.abcd)


def alpha_n(n: int, p: ParamSet) -> Scalar:
    """Diagonal coefficient of the three-term recurrence for (z + 1/z) P_n.

    Symmetric in (a, b, c, d) even though the closed form privileges a.
    """
    if n < 0:
        raise ValueError("alpha_n needs n >= 0")
    p.require_horizon(n)
    q, a, b, c, d = p.q, p.a, p.b, p.c, p.d
    abcd = p.abcd
    mid_num = a * (1 - b * c * q ** (n - 1)) * (1 - b * d * q ** (n - 1)) \
        * (1 - c * d * q ** (n - 1)) * (1 - q**n)
    mid_den = (1 - abcd * q ** (2 * n - 2)) * (1 - abcd * q ** (2 * n - 1))
    top_num = (1 - a * b * q**n) * (1 - a * c * q**n) * (1 - a * d * q**n) \
        * (1 - abcd * q ** (n - 1))
    top_den = a * (1 - abcd * q ** (2 * n - 1)) * (1 - abcd * q ** (2 * n))
    return a + 1 / a - mid_num / mid_den - top_num / top_den


def e1(p: ParamSet) -> Scalar:
    """First elementary symmetric function of (a, b, c, d)."""
    return p.a + p.b + p.c + p.d


def e3(p: ParamSet) -> Scalar:
    """Third elementary symmetric function of (a, b, c, d)."""
    a, b, c, d = p.a, p.b, p.c, p.d
    return a * b * c + a * b * d + a * c * d + b * c * d


def beta_n(n: int, p: ParamSet) -> Scalar:
    """Constant coefficient of the Hecke-route raising and lowering relations.

    beta_n = [(lambda_n + 1 - mu_{n-1}) e1 - (1 - mu_{n-1}) e3]
             / (mu_{n-1} - mu_{-n}),  with lambda_n = lambda_|n|.

    Defined for all |n| <= n_max; G5 keeps the denominator nonzero.
    """
    p.require_horizon(n)
    lam = lambda_n(n, p)
    m_prev = mu_n(n - 1, p)
    m_neg = mu_n(-n, p)
    return ((lam + 1 - m_prev) * e1(p) - (1 - m_prev) * e3(p)) / (m_prev - m_neg)


def kappa_n(n: int, p: ParamSet) -> Scalar:
    """Shift scalar of the intertwiner sending E_{-n} to E_{n-1}:

    kappa_n = (mu_{n-1} (c + d) + t0 (a + b)) / (mu_{n-1} - mu_{-n}).
    """
    p.require_horizon(n)
    m_prev = mu_n(n - 1, p)
    m_neg = mu_n(-n, p)
    return (m_prev * (p.c + p.d) + p.t0 * (p.a + p.b)) / (m_prev - m_neg)


def _draw_nonzero(rng: random.Random, max_height: int) -> Scalar:
    while True:
        num = rng.randint(-max_height, max_height)
        if num:
            return Fraction(num, rng.randint(1, max_height))


def random_param_set(rng: random.Random, n_max: int, max_height: int = 64,
                     max_tries: int = 1000) -> ParamSet:
    """Draw a certified point with small-height rational parameters.

    q is drawn with 0 < |q| < 1; a, b, c, d are nonzero with numerator and
    denominator magnitudes at most max_height.  Draws violating G1..G6 are
    rejected and retried.
    """
    for _ in range(max_tries):
        den = rng.randint(2, max_height)
        num = rng.randint(-(den - 1), den - 1)
        if not num:
            continue
        q = Fraction(num, den)
        vals = [_draw_nonzero(rng, max_height) for _ in range(4)]
        try:
            return check_genericity(q, *vals, n_max)
        except GenericityError:
            continue
    raise RuntimeError(
        f"could not draw a certified parameter set in {max_tries} tries"
    )


def random_param_sets(seed: int, trials: int, n_max: int) -> list[ParamSet]:
    """trials certified points, deterministic for a given seed."""
    rng = random.Random(seed)
    return [random_param_set(rng, n_max) for _ in range(trials)]
