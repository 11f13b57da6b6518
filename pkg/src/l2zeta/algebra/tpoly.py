"""Polynomials in ``T`` over the rational function field Q(u)."""

from __future__ import annotations

from math import gcd, lcm
from typing import Sequence

from .laurent import poly_det
from .poly import ONE, Poly, poly_gcd
from .ratfn import RationalFn, _exq


def _rf(x) -> RationalFn:
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, Poly):
        return RationalFn(x, ONE, reduced=True)
    return RationalFn.from_int(x)


class TPoly:
    """Coefficient list (index = power of T) of rational functions of u."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        c = [_rf(a) for a in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> RationalFn:
        return self.coeffs[-1]

    @property
    def palindromic(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "TPoly([" + ", ".join(str(c) for c in self.coeffs) + "])"

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = out[i] + x
        return TPoly(out)

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (RationalFn, Poly, int)):
            k = _rf(other)
            return TPoly([c * k for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return TPoly([])
        out = [RationalFn.from_int(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero():
                continue
            for j, y in enumerate(other.coeffs):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
        return TPoly(out)

    __rmul__ = __mul__

    def derivative(self) -> "TPoly":
        return TPoly([c * k for k, c in enumerate(self.coeffs) if k])

    def monic(self) -> "TPoly":
        inv = self.lc.inverse()
        return TPoly([c * inv for c in self.coeffs])

    def divmod(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("TPoly division by zero")
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return TPoly([]), self
        inv = other.lc.inverse()
        q = [RationalFn.from_int(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            f = r[k + db] * inv
            q[k] = f
            if not f.is_zero():
                for j, bj in enumerate(other.coeffs):
                    r[k + j] = r[k + j] - f * bj
        return TPoly(q), TPoly(r[:db])

    def __call__(self, u, T):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * T + c(u)
        return acc

    def at_u(self, u) -> list:
        return [c(u) for c in self.coeffs]

    def cleared(self) -> tuple[list[Poly], Poly]:
        """Denominator-free form: ``(F, D)`` with ``self = sum(F[k] T^k) / D``.

        F has Z[u] coefficients and D is the lcm of the coefficient
        denominators; a common integer content of F and D is divided out.
        """
        prim_lcm, int_lcm = ONE, 1
        for c in self.coeffs:
            cont = c.den.content()
            pd = Poly(a // cont for a in c.den.c)
            prim_lcm = prim_lcm * _exq(pd, poly_gcd(prim_lcm, pd))
            int_lcm = lcm(int_lcm, cont)
        out = []
        for c in self.coeffs:
            cont = c.den.content()
            pd = Poly(a // cont for a in c.den.c)
            out.append(c.num * _exq(prim_lcm, pd) * (int_lcm // cont))
        D = prim_lcm * int_lcm
        common = D.content()
        for p in out:
            common = gcd(common, p.content())
        if common > 1:
            out = [Poly(a // common for a in p.c) for p in out]
            D = Poly(a // common for a in D.c)
        return out, D


# -- primitive arithmetic in Z[u][T] -----------------------------------------
# Lists of Poly (index = power of T). Working over Z[u] avoids the coefficient
# swell of Euclid over Q(u); results are only defined up to a unit factor.

def _zu_content(A: list[Poly]) -> Poly:
    g, ic = Poly(), 0
    for c in A:
        if c.is_zero():
            continue
        ic = gcd(ic, c.content())
        g = poly_gcd(g, c) if not g.is_zero() else c.primitive()
        if g.is_const():
            g = ONE
    return g * ic if ic else Poly()


def _zu_primitive(A: list[Poly]) -> list[Poly]:
    c = _zu_content(A)
    out = [_exq_signed(a, c) for a in A]
    if out and out[-1].lc < 0:
        out = [-a for a in out]
    return out


def _exq_signed(a: Poly, c: Poly) -> Poly:
    ic = c.content()
    pc = Poly(x // ic for x in c.c)
    a = _exq(a, pc) if not pc.is_const() else a
    a = Poly(x // ic for x in a.c)
    return a if pc.lc > 0 else -a


def _prem(A: list[Poly], B: list[Poly]) -> tuple[list[Poly], list[Poly]]:
    """Pseudo-division: lc(B)^k A = Q B + R with k = deg A - deg B + 1."""
    r = list(A)
    db, lb = len(B) - 1, B[-1]
    zero = Poly()
    if len(r) - 1 < db:
        return [], r
    q = [zero] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        top = r[k + db]
        q = [x * lb for x in q]
        q[k] = top
        r = [x * lb for x in r]
        if not top.is_zero():
            for j, bj in enumerate(B):
                r[k + j] = r[k + j] - top * bj
        r.pop()
    while r and r[-1].is_zero():
        r.pop()
    return q, r


def _zu_gcd(A: list[Poly], B: list[Poly]) -> list[Poly]:
    x, y = _zu_primitive(A), _zu_primitive(B)
    if len(x) < len(y):
        x, y = y, x
    while y:
        _, r = _prem(x, y)
        x, y = y, (_zu_primitive(r) if r else [])
    return x


def _zu_exdiv(A: list[Poly], B: list[Poly]) -> list[Poly]:
    """A / B when B divides A, as a primitive representative."""
    q, r = _prem(A, B)
    if r:
        raise ArithmeticError("inexact division in Z[u][T]")
    return _zu_primitive(q)


def _to_tpoly(A: list[Poly]) -> TPoly:
    return TPoly(A).monic()


def tpoly_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Monic gcd over Q(u), by a primitive remainder sequence over Z[u]."""
    if a.is_zero() and b.is_zero():
        return a
    if a.is_zero() or b.is_zero():
        return (b if a.is_zero() else a).monic()
    g = _zu_gcd(a.cleared()[0], b.cleared()[0])
    return _to_tpoly(g)


def sylvester(f: Sequence[Poly], g: Sequence[Poly]) -> list[list[Poly]]:
    """Sylvester matrix of two polynomials in T with Z[u] coefficients."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero = Poly()
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return rows


def discriminant_T(P: TPoly) -> RationalFn:
    """Discriminant in T, as a reduced rational function of u.

    Computed as (-1)^(m(m-1)/2) Res(F, F') / lc(F) on the denominator-free
    form F, then rescaled by the cleared denominator.
    """
    m = P.degree
    if m < 1:
        raise ValueError("discriminant_T needs a polynomial of positive degree in T")
    F, D = P.cleared()
    if m == 1:
        return RationalFn.from_int(1)
    dF = [p * k for k, p in enumerate(F) if k]
    res = poly_det(sylvester(F, dF))
    if (m * (m - 1) // 2) % 2:
        res = -res
    # disc(P) = disc(F) / D^(2m-2), disc(F) = res / lc(F)
    return RationalFn(res, F[-1] * D ** (2 * m - 2))


def yun_factors(P: TPoly) -> list[tuple[TPoly, int]]:
    """Square-free factorization over Q(u): monic ``(factor, k)`` with P ~ prod factor^k.

    Musser's form of the algorithm, which needs only gcds and exact
    quotients, so it runs on primitive representatives in Z[u][T].
    """
    if P.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if P.degree < 1:
        return []
    f = _zu_primitive(P.cleared()[0])
    df = [c * k for k, c in enumerate(f) if k]
    g = _zu_gcd(f, df)
    if len(g) == 1:
        return [(P.monic(), 1)]
    w = _zu_exdiv(f, g)
    factors = []
    k = 1
    while len(w) > 1:
        y = _zu_gcd(w, g)
        z = _zu_exdiv(w, y)
        if len(z) > 1:
            factors.append((_to_tpoly(z), k))
        w = y
        g = _zu_exdiv(g, y)
        k += 1
    return factors


def deflate_repeated_factors(P: TPoly) -> tuple[TPoly, list[tuple[TPoly, int]]]:
    """Square-free part of P and the monic factors removed, by multiplicity.

    Yun's algorithm over Q(u). The returned list holds ``(factor, k)`` for
    every k >= 2 whose factor is nonconstant; the square-free part is the
    product of all nonconstant Yun factors (monic).
    """
    factors = yun_factors(P)
    if all(k == 1 for _, k in factors):
        return P, []
    sqfree = TPoly([1])
    for fac, _ in factors:
        sqfree = sqfree * fac
    repeated = [(fac, k) for fac, k in factors if k >= 2]
    return sqfree, repeated
