"""Construction of the symmetric and nonsymmetric polynomial families.

Two independent routes are implemented on purpose.

The symmetric family P_n (monic, invariant under z -> 1/z) has a closed
hypergeometric construction, `askey_wilson_P`, built from q-Pochhammer
products.  It also has a linear-algebra construction,
`askey_wilson_P_oracle`, that diagonalizes the q-difference operator D on
a finite window; the two must agree coefficient by coefficient, and the
test suite checks that they do.

The nonsymmetric family E_n is defined spectrally: E_n is the eigenvector
of Y = T1 T0 with eigenvalue mu_n, normalized so the z^n coefficient is 1.
In the basis 1, z^-1, z, z^-2, z^2, ... the matrix of Y on the window
spanned by z^-k .. z^k is upper triangular with the mu values on the
diagonal.  The builders verify that structure at runtime instead of
assuming it; genericity (G5, G6) then makes each eigenspace
one-dimensional, and any departure raises EigenSolveError.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .hecke import apply_D, apply_T1, apply_Y
from .laurent import LaurentPoly
from .scalars import ParamSet, Scalar, alpha_n, lambda_n, mu_n, q_pochhammer


class EigenSolveError(ArithmeticError):
    """Eigenvector extraction failed a structural expectation."""


class ExtractionError(ArithmeticError):
    """A claimed exact relation between polynomials failed to close.

    The nonzero difference is kept in .residual for inspection.
    """

    def __init__(self, message: str, residual: LaurentPoly):
        super().__init__(f"{message}; residual {residual}")
        self.residual = residual


def position(n: int) -> int:
    """Index of z^n in the ordering 1, z^-1, z, z^-2, z^2, ..."""
    if n == 0:
        return 0
    return -2 * n - 1 if n < 0 else 2 * n


def exponent_at(i: int) -> int:
    """Exponent stored at index i; inverse of position."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    if i % 2:
        return -((i + 1) // 2)
    return i // 2


def _nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right nullspace of a square matrix, by exact elimination."""
    m = [row[:] for row in rows]
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        hit = next((i for i in range(r, n_rows) if m[i][c]), None)
        if hit is None:
            continue
        m[r], m[hit] = m[hit], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [v - f * w for v, w in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    basis = []
    for free in (c for c in range(n_cols) if c not in pivots):
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -m[i][free]
        basis.append(vec)
    return basis


@lru_cache(maxsize=None)
def y_matrix(k: int, p: ParamSet) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of Y on span(z^-k .. z^k) in the position ordering.

    Entry [i][j] is the z^exponent_at(i) coefficient of Y z^exponent_at(j).
    The builder checks that the window is stable under Y, that the matrix
    comes out upper triangular, and that the diagonal carries mu; any
    violation raises EigenSolveError.
    """
    if k < 0:
        raise ValueError("window size must be nonnegative")
    size = 2 * k + 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    for j in range(size):
        image = apply_Y(LaurentPoly.monomial(exponent_at(j)), p)
        for deg, coeff in image.items():
            if abs(deg) > k:
                raise EigenSolveError(
                    f"Y z^{exponent_at(j)} escapes the window at z^{deg}"
                )
            rows[position(deg)][j] = coeff
    for j in range(size):
        for i in range(j + 1, size):
            if rows[i][j]:
                raise EigenSolveError(
                    f"Y matrix has nonzero entry ({i},{j}) below the diagonal"
                )
        want = mu_n(exponent_at(j), p)
        if rows[j][j] != want:
            raise EigenSolveError(
                f"Y matrix diagonal at z^{exponent_at(j)} is {rows[j][j]}, "
                f"expected mu = {want}"
            )
    return tuple(tuple(row) for row in rows)


@lru_cache(maxsize=None)
def d_matrix(k: int, p: ParamSet) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of D on symmetric polynomials of degree <= k.

    The basis is m_0 = 1 and m_j = z^j + z^-j.  Entry [i][j] is the m_i
    coefficient of D m_j.  Degree preservation makes the matrix upper
    triangular with lambda on the diagonal; both facts are checked.
    """
    if k < 0:
        raise ValueError("window size must be nonnegative")
    rows = [[Fraction(0)] * (k + 1) for _ in range(k + 1)]
    for j in range(k + 1):
        basis_j = LaurentPoly.one() if j == 0 else LaurentPoly({j: 1, -j: 1})
        image = apply_D(basis_j, p)
        if not image.is_symmetric():
            raise EigenSolveError(f"D m_{j} is not symmetric")
        top = image.max_deg
        if top is not None and top > j:
            raise EigenSolveError(f"D m_{j} raises the degree to {top}")
        for i in range(j + 1):
            rows[i][j] = image.coeff(i)
        want = lambda_n(j, p)
        if rows[j][j] != want:
            raise EigenSolveError(
                f"D matrix diagonal at degree {j} is {rows[j][j]}, "
                f"expected lambda = {want}"
            )
    return tuple(tuple(row) for row in rows)


@lru_cache(maxsize=None)
def askey_wilson_P(n: int, p: ParamSet) -> LaurentPoly:
    """Monic symmetric polynomial P_n as a terminating hypergeometric sum.

    P_n = (ab)_n (ac)_n (ad)_n / (a^n (abcd q^{n-1})_n)
          * sum_{k=0}^{n} (abcd q^{n-1})_k (q^{-n})_k q^k
            / ((ab)_k (ac)_k (ad)_k (q)_k)
          * prod_{j<k} (1 - a q^j z)(1 - a q^j / z)

    with (x)_k the q-Pochhammer symbol.  The normalization makes the z^n
    coefficient exactly 1.
    """
    if n < 0:
        raise ValueError("askey_wilson_P needs n >= 0")
    p.require_horizon(n)
    q, a = p.q, p.a
    x_ab, x_ac, x_ad = a * p.b, a * p.c, a * p.d
    x_s = p.abcd * q ** (n - 1)
    prefactor = (
        q_pochhammer(x_ab, n, q)
        * q_pochhammer(x_ac, n, q)
        * q_pochhammer(x_ad, n, q)
        / (a**n * q_pochhammer(x_s, n, q))
    )
    z = LaurentPoly.monomial(1)
    z_inv = LaurentPoly.monomial(-1)
    total = LaurentPoly.zero()
    factor = LaurentPoly.one()
    for k in range(n + 1):
        coeff = (
            q_pochhammer(x_s, k, q)
            * q_pochhammer(q**-n, k, q)
            * q**k
            / (
                q_pochhammer(x_ab, k, q)
                * q_pochhammer(x_ac, k, q)
                * q_pochhammer(x_ad, k, q)
                * q_pochhammer(q, k, q)
            )
        )
        total = total + factor.scale(coeff)
        aq = a * q**k
        factor = factor * (1 - aq * z) * (1 - aq * z_inv)
    return total.scale(prefactor)


def askey_wilson_P_oracle(n: int, p: ParamSet) -> LaurentPoly:
    """P_n constructed the slow way, as the lambda_n eigenvector of D.

    Solves (D - lambda_n) v = 0 on the symmetric window of degree n and
    normalizes the top coefficient to 1.  Exists to cross-check
    askey_wilson_P through an unrelated computation.
    """
    if n < 0:
        raise ValueError("askey_wilson_P_oracle needs n >= 0")
    p.require_horizon(n)
    rows = d_matrix(n, p)
    lam = lambda_n(n, p)
    shifted = [
        [rows[i][j] - (lam if i == j else 0) for j in range(n + 1)]
        for i in range(n + 1)
    ]
    basis = _nullspace(shifted)
    if len(basis) != 1:
        raise EigenSolveError(
            f"lambda_{n} eigenspace has dimension {len(basis)}, expected 1"
        )
    v = basis[0]
    if not v[n]:
        raise EigenSolveError(f"lambda_{n} eigenvector has no degree-{n} part")
    v = [x / v[n] for x in v]
    coeffs = {0: v[0]}
    for i in range(1, n + 1):
        coeffs[i] = v[i]
        coeffs[-i] = v[i]
    return LaurentPoly(coeffs)


@lru_cache(maxsize=None)
def nonsymmetric_E(n: int, p: ParamSet) -> LaurentPoly:
    """Eigenvector of Y = T1 T0 with eigenvalue mu_n, z^n coefficient 1.

    Solved exactly on the window z^-|n| .. z^|n|.  Genericity (G5) makes
    the eigenspace one-dimensional; a different dimension or a vanishing
    z^n coefficient raises EigenSolveError.
    """
    p.require_horizon(n)
    k = abs(n)
    size = 2 * k + 1
    rows = y_matrix(k, p)
    mu = mu_n(n, p)
    shifted = [
        [rows[i][j] - (mu if i == j else 0) for j in range(size)]
        for i in range(size)
    ]
    basis = _nullspace(shifted)
    if len(basis) != 1:
        raise EigenSolveError(
            f"mu_{n} eigenspace has dimension {len(basis)}, expected 1"
        )
    v = basis[0]
    lead = v[position(n)]
    if not lead:
        raise EigenSolveError(f"mu_{n} eigenvector has no z^{n} part")
    return LaurentPoly({exponent_at(i): v[i] / lead for i in range(size)})


def symmetrize(f: LaurentPoly, p: ParamSet) -> LaurentPoly:
    """(T1 + 1) f, which is always symmetric."""
    return apply_T1(f, p) + f


def recurrence_ratio(n: int, p: ParamSet) -> Scalar:
    """Coefficient c_n in (z + 1/z) P_n = P_{n+1} + alpha_n P_n + c_n P_{n-1}.

    Extracted from the polynomials themselves rather than from a formula:
    the difference (z + 1/z - alpha_n) P_n - P_{n+1} must be an exact
    multiple of P_{n-1}, and c_n is that multiple.  ExtractionError means
    the recurrence failed to close, which at a certified parameter point
    would be a genuine bug.
    """
    if n < 2:
        raise ValueError("recurrence_ratio needs n >= 2")
    p.require_horizon(n + 1)
    zpz = LaurentPoly({1: 1, -1: 1})
    pn = askey_wilson_P(n, p)
    g = zpz * pn - askey_wilson_P(n + 1, p) - pn.scale(alpha_n(n, p))
    c = g.coeff(n - 1)
    residual = g - askey_wilson_P(n - 1, p).scale(c)
    if not residual.is_zero():
        raise ExtractionError("three-term recurrence did not close", residual)
    return c


def polynomial_document(kind: str, n: int, p: ParamSet,
                        poly: LaurentPoly) -> dict:
    """JSON-ready record of one constructed polynomial.

    The polynomial's own keys (var, coeffs) sit at the top level, so the
    document round-trips through LaurentPoly.from_json_dict unchanged.
    """
    return {"kind": kind, "n": n, "params": p.as_json_dict(),
            **poly.to_json_dict()}
