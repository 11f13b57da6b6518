"""Dense univariate polynomials in ``u`` with integer coefficients.

Coefficients are stored low degree first as a tuple of Python ints, so they
are arbitrary precision and the objects are hashable and immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _trim(coeffs: Sequence) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Integer polynomial in one variable (``u``)."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"integer coefficients required, got {a!r}")
        self.c = c

    @classmethod
    def const(cls, a: int) -> "Poly":
        return cls((a,))

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "Poly":
        return cls((0,) * k + (a,))

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_const(self) -> bool:
        return len(self.c) <= 1

    @property
    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def coeff(self, k: int) -> int:
        return self.c[k] if 0 <= k < len(self.c) else 0

    def content(self) -> int:
        g = 0
        for a in self.c:
            g = gcd(g, a)
        return g

    def primitive(self) -> "Poly":
        """Divide out the content and make the leading coefficient positive."""
        if not self.c:
            return self
        g = self.content()
        if self.c[-1] < 0:
            g = -g
        return Poly(a // g for a in self.c)

    def valuation(self) -> int:
        for k, a in enumerate(self.c):
            if a:
                return k
        return -1

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-a for a in self.c)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Poly(a * other for a in self.c) if other else Poly()
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    def __repr__(self):
        return f"Poly({list(self.c)})"

    def __str__(self):
        if not self.c:
            return "0"
        terms = []
        for k, a in enumerate(self.c):
            if not a:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if mono and abs(a) == 1:
                s = mono
            else:
                s = f"{abs(a)}{'*' + mono if mono else ''}"
            terms.append(("-" if a < 0 else "+", s))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {sg} {s}" for sg, s in terms[1:])

    def exquo(self, other: "Poly") -> "Poly":
        """Exact division in Z[u]; raises ArithmeticError if not exact."""
        q, r = divmod_int(self, other)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q

    def derivative(self) -> "Poly":
        return Poly(k * a for k, a in enumerate(self.c) if k)

    def shift(self, k: int) -> "Poly":
        """Multiply by u**k (k >= 0)."""
        return Poly((0,) * k + self.c) if self.c else self

    def reverse(self, deg: int | None = None) -> "Poly":
        """u**deg * p(1/u)."""
        d = self.degree if deg is None else deg
        c = list(self.c) + [0] * (d + 1 - len(self.c))
        return Poly(reversed(c[: d + 1]))

    def __call__(self, x):
        acc = 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def to_fractions(self) -> list[Fraction]:
        return [Fraction(a) for a in self.c]


def divmod_int(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Division with remainder in Z[u], requiring each step to divide exactly.

    Suitable when the quotient is known to have integer coefficients; raises
    ArithmeticError otherwise.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.c)
    db, lb = b.degree, b.lc
    if len(r) - 1 < db:
        return Poly(), a
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        top = r[k + db]
        if top == 0:
            continue
        qk, rem = divmod(top, lb)
        if rem:
            raise ArithmeticError("inexact integer division in divmod_int")
        q[k] = qk
        for j, bj in enumerate(b.c):
            r[k + j] -= qk * bj
    return Poly(q), Poly(r)


# -- rational-coefficient helpers (used for gcds) ---------------------------

def _qtrim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qrem(a: list, b: list) -> list:
    r = list(a)
    db, inv = len(b) - 1, 1 / Fraction(b[-1])
    while len(r) - 1 >= db and r:
        f = r[-1] * inv
        off = len(r) - 1 - db
        for j, bj in enumerate(b):
            r[off + j] -= f * bj
        r.pop()
        _qtrim(r)
    return r


def _from_fractions(c: list) -> Poly:
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    return Poly(int(x * den) for x in c).primitive()


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[u] (positive leading coefficient).

    Euclid over Q with monic normalization, then cleared back to Z; the
    integer content of the gcd is the gcd of contents.
    """
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    x, y = a.primitive(), b.primitive()
    if x.degree < y.degree:
        x, y = y, x
    if y.is_const():
        return Poly.const(1)
    p = [Fraction(v) for v in x.c]
    q = [Fraction(v) for v in y.c]
    while q:
        r = _qrem(p, q)
        p, q = q, r
        if q:
            lead = q[-1]
            q = [v / lead for v in q]
    return _from_fractions(p)


def poly_divmod_q(a: Poly, b: Poly) -> tuple[list[Fraction], list[Fraction]]:
    """Quotient and remainder over Q as Fraction lists (low first)."""
    r = [Fraction(v) for v in a.c]
    db = b.degree
    if len(r) - 1 < db:
        return [], r
    q = [Fraction(0)] * (len(r) - db)
    inv = 1 / Fraction(b.lc)
    for k in range(len(r) - 1 - db, -1, -1):
        f = r[k + db] * inv
        q[k] = f
        if f:
            for j, bj in enumerate(b.c):
                r[k + j] -= f * bj
    return _qtrim(q), _qtrim(r[:db])


def squarefree_part(p: Poly) -> Poly:
    """Product of the distinct irreducible factors of p (primitive)."""
    if p.degree < 1:
        return p.primitive()
    g = poly_gcd(p, p.derivative())
    if g.is_const():
        return p.primitive()
    q, r = poly_divmod_q(p.primitive(), g)
    assert not r
    return _from_fractions(q)


def chebyshev_t(k: int) -> list[int]:
    """Coefficients (low first) of the first-kind Chebyshev polynomial T_k."""
    if k == 0:
        return [1]
    prev, cur = [1], [0, 1]
    for _ in range(k - 1):
        nxt = [0] + [2 * a for a in cur]
        for i, a in enumerate(prev):
            nxt[i] -= a
        prev, cur = cur, nxt
    return cur


U = Poly((0, 1))
ONE = Poly((1,))
ZERO = Poly()
