"""The polynomial Omega(T) = prod over sign vectors I of (T - W_I).

With s_i = sqrt(r_i + 1) sqrt(r_i - 1) and W_I = prod_i (r_i + iota_i s_i),
the power sums of the roots of Omega factor over i:

    sum_I W_I^k = prod_i ((r_i + s_i)^k + (r_i - s_i)^k) = 2^n prod_i T_k(r_i)

because (r + s)(r - s) = 1. The product of T_k over the roots of P_u is a
norm in Q(u)[x]/(P_u), i.e. the determinant of T_k at the companion matrix,
so Omega is obtained exactly from Newton's identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from ..algebra import Poly, RationalFn, TPoly
from ..algebra.laurent import cofactor_det, bareiss_det
from ..zeta import PuData, psqrt, roots_at

N_MAX = 4


class SymbolicLimitExceeded(ValueError):
    """n is above the symbolic limit; the sampled (numeric) route must be used."""


# -- generic form in the elementary symmetric functions ----------------------

class MPoly:
    """Sparse multivariate polynomial {exponent tuple: Fraction}."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.nvars, other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return MPoly(self.nvars, {k: v * other for k, v in self.terms.items()})
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.terms == other.terms

    def integer_terms(self) -> dict[tuple, int]:
        out = {}
        for k, v in self.terms.items():
            if v.denominator != 1:
                raise ArithmeticError("non-integral coefficient")
            out[k] = int(v)
        return out


def _companion(coeffs_monic_low_first, zero, one):
    """Companion matrix of x^n + c_{n-1} x^{n-1} + ... + c_0."""
    n = len(coeffs_monic_low_first)
    C = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = one
    for i in range(n):
        C[i][n - 1] = -coeffs_monic_low_first[i]
    return C


def _matmul(A, B, zero):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                if not A[i][k].is_zero() and not B[k][j].is_zero():
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def _chebyshev_matrices(C, kmax, zero, one):
    """[T_1(C), ..., T_kmax(C)] by T_k = 2 C T_{k-1} - T_{k-2}."""
    n = len(C)
    ident = [[one if i == j else zero for j in range(n)] for i in range(n)]
    prev, cur = ident, C
    out = [C]
    for _ in range(2, kmax + 1):
        prod = _matmul(C, cur, zero)
        nxt = [[prod[i][j] * 2 - prev[i][j] for j in range(n)] for i in range(n)]
        prev, cur = cur, nxt
        out.append(cur)
    return out


def _det(M):
    if len(M) == 1:
        return M[0][0]
    return cofactor_det(M) if len(M) <= 4 else bareiss_det(M)


def _newton(power_sums, zero, one, divide):
    """Elementary symmetric e_0..e_m from power sums p_1..p_m."""
    e = [one]
    for k in range(1, len(power_sums) + 1):
        acc = zero
        for j in range(1, k + 1):
            term = e[k - j] * power_sums[j - 1]
            acc = acc + term if j % 2 else acc - term
        e.append(divide(acc, k))
    return e


def omega_sigma_form(n: int) -> list[dict[tuple, int]]:
    """Coefficients of Omega (index = power of T) as polynomials in sigma_1..sigma_n.

    Each coefficient is a dict mapping exponent tuples (a_1..a_n) of
    sigma_1^a_1 ... sigma_n^a_n to integers.
    """
    if n < 1:
        raise ValueError("n must be positive")
    zero, one = MPoly(n), MPoly.const(n, 1)
    # prod (x - r_i) = x^n - sigma_1 x^{n-1} + sigma_2 x^{n-2} - ...
    low = []
    for j in range(n):  # coefficient of x^j
        i = n - j
        s = MPoly.var(n, i - 1)
        low.append(s if i % 2 == 0 else -s)
    C = _companion(low, zero, one)
    m = 2 ** n
    sums = [_det(Tk) * (2 ** n) for Tk in _chebyshev_matrices(C, m, zero, one)]
    e = _newton(sums, zero, one, lambda a, k: a * Fraction(1, k))
    return [((-1) ** (m - d) * e[m - d]).integer_terms() for d in range(m + 1)]


def omega_symbolic(pu: PuData) -> TPoly:
    """Omega as a polynomial in T over Q(u), exactly."""
    n = pu.n
    if n > N_MAX:
        raise SymbolicLimitExceeded(
            f"n = {n} exceeds the symbolic limit {N_MAX}; use the numeric path")
    if n == 0:
        return TPoly([-1, 1])
    zero, one = RationalFn.from_int(0), RationalFn.from_int(1)
    # P_u / ((-1)^n alpha) is monic in x with roots r_i
    lead = RationalFn(pu.P.coeffs[-1])
    low = [RationalFn(c) / lead for c in pu.P.coeffs[:-1]]
    C = _companion(low, zero, one)
    m = 2 ** n
    sums = [_det(Tk) * (2 ** n) for Tk in _chebyshev_matrices(C, m, zero, one)]
    e = _newton(sums, zero, one, lambda a, k: a / k)
    return TPoly([e[m - d] * (-1) ** (m - d) for d in range(m + 1)])


def substitute_sigmas(form: list[dict[tuple, int]], sigmas: list[RationalFn]) -> TPoly:
    """Evaluate a sigma-form of Omega at concrete rational functions."""
    out = []
    for coeff in form:
        acc = RationalFn.from_int(0)
        for exps, c in coeff.items():
            term = RationalFn.from_int(c)
            for s, a in zip(sigmas, exps):
                if a:
                    term = term * s ** a
            acc = acc + term
        out.append(acc)
    return TPoly(out)


# -- numeric specialization ---------------------------------------------------

@dataclass(frozen=True)
class SheetValues:
    u0: complex
    signs: tuple[tuple[int, ...], ...]
    W: tuple[complex, ...]

    def value(self, signs) -> complex:
        return self.W[self.signs.index(tuple(signs))]


def sheet_values(pu: PuData, u0: complex) -> SheetValues:
    """W_I(u0) for every sign vector I, with principal square roots."""
    rs = roots_at(pu, u0).roots
    s = [psqrt(r + 1) * psqrt(r - 1) for r in rs]
    signs = tuple(itertools.product((1, -1), repeat=pu.n))
    W = []
    for I in signs:
        w = 1.0 + 0j
        for r, si, iota in zip(rs, s, I):
            w *= r + iota * si
        W.append(w)
    return SheetValues(complex(u0), signs, tuple(W))


def omega_numeric_at(pu: PuData, u0: complex) -> np.ndarray:
    """Monic coefficients (highest power of T first) of Omega at u0."""
    return np.poly(np.array(sheet_values(pu, u0).W))


# -- exact bivariate form shared by both routes -------------------------------

@dataclass(frozen=True)
class OmegaPoly:
    """Omega with its exact form and numeric evaluation.

    ``symbolic`` is set when the power-sum construction was used (n <= N_MAX);
    ``exact`` always holds the polynomial, possibly recovered from samples.
    """

    pu: PuData
    symbolic: TPoly | None
    exact: TPoly

    @property
    def degree(self) -> int:
        return 2 ** self.pu.n

    def numeric_at(self, u0: complex) -> np.ndarray:
        return omega_numeric_at(self.pu, u0)


def build_omega(pu: PuData, symbolic: bool = True) -> OmegaPoly:
    """Exact Omega; for n above the symbolic limit (or on request) by sampling."""
    if symbolic and pu.n <= N_MAX:
        om = omega_symbolic(pu)
        return OmegaPoly(pu, om, om)
    return OmegaPoly(pu, None, omega_interpolated(pu))


def _omega_at_integer(pu: PuData, u0: int) -> list[Fraction]:
    """Coefficients e_0..e_m of prod (T - W_I) at an integer u0, exactly.

    Same power-sum construction as omega_symbolic, but over Q at a point.
    """
    P = [Fraction(c(u0)) for c in pu.P.coeffs]
    low = [c / P[-1] for c in P[:-1]]
    n, m = pu.n, 2 ** pu.n
    C = [[Fraction(int(i == j + 1)) for j in range(n)] for i in range(n)]
    for i in range(n):
        C[i][n - 1] = -low[i]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    prev, cur = ident, C
    sums = []
    for k in range(1, m + 1):
        if k > 1:
            prod = [[sum(C[i][l] * cur[l][j] for l in range(n)) for j in range(n)]
                    for i in range(n)]
            prev, cur = cur, [[2 * prod[i][j] - prev[i][j] for j in range(n)] for i in range(n)]
        sums.append(_fraction_det(cur) * 2 ** n)
    return _newton(sums, Fraction(0), Fraction(1), lambda a, k: a / k)


def _fraction_det(M) -> Fraction:
    a = [list(row) for row in M]
    n, det = len(a), Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return det


def _interpolate(xs: list[int], ys: list[Fraction]) -> list[Fraction]:
    """Monomial coefficients (low first) of the interpolating polynomial."""
    dd = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    out = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # out = out * (x - xs[i]) + dd[i]
        nxt = [Fraction(0)] * n
        for k in range(n - 1):
            nxt[k + 1] += out[k]
            nxt[k] -= xs[i] * out[k]
        nxt[0] += dd[i]
        out = nxt
    return out


def omega_interpolated(pu: PuData, checks: int = 2) -> TPoly:
    """Recover Omega exactly by evaluation at integer points and interpolation.

    Each coefficient times alpha^(2^(n-1)) is an integer polynomial in u of
    bounded degree. It is evaluated exactly at integer points (power sums
    over Q) and interpolated; a few extra points check the degree bound.
    """
    n = pu.n
    if n == 0:
        return TPoly([-1, 1])
    m = 2 ** n
    M = 2 ** (n - 1)
    deg_bound = M * max(max(c.degree for c in pu.P.coeffs), pu.alpha.degree)
    xs, u = [], 1
    while len(xs) < deg_bound + 1 + checks:
        if pu.alpha(u) != 0:
            xs.append(u)
        u += 1
    vals = [[c * pu.alpha(x) ** M for c in _omega_at_integer(pu, x)] for x in xs]
    fit, extra = xs[:deg_bound + 1], xs[deg_bound + 1:]
    coeffs = []
    for d in range(m + 1):
        ys = [v[m - d] * (-1) ** (m - d) for v in vals]
        c = _interpolate(fit, ys[:deg_bound + 1])
        for x, y in zip(extra, ys[deg_bound + 1:]):
            if sum(ck * x ** k for k, ck in enumerate(c)) != y:
                raise ArithmeticError("interpolated Omega fails the check points")
        if any(ck.denominator != 1 for ck in c):
            raise ArithmeticError("interpolated Omega has non-integral coefficients")
        coeffs.append(RationalFn(Poly([int(ck) for ck in c]), pu.alpha ** M))
    return TPoly(coeffs)
