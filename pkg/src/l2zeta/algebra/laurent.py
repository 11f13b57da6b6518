"""Laurent polynomials in ``t`` over Z[u], their determinants, and the x-basis.

A symmetric Laurent polynomial L(t) = L(1/t) can be written as P((t+1/t)/2)
for an ordinary polynomial P; :func:`to_x_basis` performs that rewrite with
first-kind Chebyshev polynomials, since t^k + t^-k = 2 T_k(x).
"""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from .poly import ONE, Poly, chebyshev_t, divmod_int


class LaurentPoly:
    """Finite sum of c_k(u) t^k with integer polynomial coefficients c_k."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Poly] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            if isinstance(c, int):
                c = Poly.const(c)
            if not c.is_zero():
                clean[int(k)] = c
        self.terms = clean

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def t_power(cls, k: int, c=1) -> "LaurentPoly":
        return cls({k: c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def t_min(self) -> int:
        return min(self.terms) if self.terms else 0

    @property
    def t_max(self) -> int:
        return max(self.terms) if self.terms else 0

    def coeff(self, k: int) -> Poly:
        return self.terms.get(k, Poly())

    def is_symmetric(self) -> bool:
        return all(self.coeff(-k) == c for k, c in self.terms.items())

    def inverted(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly({-k: c for k, c in self.terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, Poly] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                p = a * b
                out[i + j] = out[i + j] + p if i + j in out else p
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((k, c.c) for k, c in self.terms.items())))

    def __repr__(self):
        inner = ", ".join(f"{k}: {c}" for k, c in sorted(self.terms.items()))
        return f"LaurentPoly({{{inner}}})"

    def __call__(self, u, t):
        return sum(c(u) * t ** k for k, c in self.terms.items())

    def exquo(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division in Z[u][t, 1/t]."""
        if other.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return self
        a = _as_tpoly(self)
        b = _as_tpoly(other)
        q, r = _tpoly_divmod(a, b)
        if any(not c.is_zero() for c in r):
            raise ArithmeticError("Laurent division is not exact")
        shift = self.t_min - other.t_min
        return LaurentPoly({k + shift: c for k, c in enumerate(q)})


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Poly)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def _as_tpoly(p: LaurentPoly) -> list[Poly]:
    lo = p.t_min
    return [p.coeff(k) for k in range(lo, p.t_max + 1)]


def _tpoly_divmod(a: list[Poly], b: list[Poly]):
    # long division in t over Z[u]; each leading-coefficient division must be
    # exact in Z[u], which holds whenever the overall division is exact
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    q = [Poly()] * (len(r) - db)
    lb = b[-1]
    for k in range(len(r) - 1 - db, -1, -1):
        top = r[k + db]
        if top.is_zero():
            continue
        qk, rem = divmod_int(top, lb)
        if rem:
            raise ArithmeticError("Laurent division is not exact")
        q[k] = qk
        for j, bj in enumerate(b):
            r[k + j] = r[k + j] - qk * bj
    return q, r[:db]


# -- determinants ------------------------------------------------------------

def _zero_like(x):
    return type(x)() if not isinstance(x, LaurentPoly) else LaurentPoly()


def _one_like(x):
    return LaurentPoly.const(1) if isinstance(x, LaurentPoly) else ONE


def cofactor_det(m: Sequence[Sequence]):
    """Determinant by Laplace expansion along the first row (small sizes)."""
    n = len(m)
    if n == 0:
        return None
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        a = m[0][j]
        if a.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = a * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else _zero_like(m[0][0])


def bareiss_det(m: Sequence[Sequence]):
    """Fraction-free Gaussian elimination over an integral domain.

    Entries need +, -, *, is_zero() and an exact division ``exquo``.
    """
    n = len(m)
    a = [list(row) for row in m]
    sign = 1
    prev = None
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _zero_like(a[0][0])
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = piv * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = val if prev is None else val.exquo(prev)
            a[i][k] = _zero_like(piv)
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def laurent_det(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("laurent_det needs a square matrix")
    if n == 0:
        return LaurentPoly.const(1)
    if n <= 4:
        return cofactor_det(m)
    return bareiss_det(m)


def poly_det(m: Sequence[Sequence[Poly]]) -> Poly:
    """Exact determinant of a square matrix over Z[u] (fraction-free)."""
    n = len(m)
    if n == 0:
        return ONE
    return bareiss_det(m)


def leibniz_det(m):
    """Reference determinant by the permutation expansion; tests only."""
    n = len(m)
    total = None
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = _one_like(m[0][0])
        for i, p in enumerate(perm):
            term = term * m[i][p]
        if inv % 2:
            term = -term
        total = term if total is None else total + term
    return total


# -- Chebyshev rewriting -----------------------------------------------------

class XPoly:
    """Polynomial in x whose coefficients (index = power of x) lie in Z[u]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Poly]):
        c = [Poly.const(a) if isinstance(a, int) else a for a in coeffs]
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Poly:
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, XPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"XPoly({[str(c) for c in self.coeffs]})"

    def __call__(self, u, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c(u)
        return acc

    def at_u(self, u) -> list:
        """Numeric coefficients (low first) at a given u."""
        return [c(u) for c in self.coeffs]

    def value_at_x(self, x: int) -> Poly:
        """Exact polynomial in u obtained by substituting an integer x."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def to_x_basis(L: LaurentPoly) -> XPoly:
    """Rewrite a t <-> 1/t symmetric Laurent polynomial as P((t+1/t)/2)."""
    if not L.is_symmetric():
        raise ValueError("to_x_basis needs a Laurent polynomial symmetric under t -> 1/t")
    top = max((k for k in L.terms), default=0)
    out = [Poly() for _ in range(top + 1)]
    out[0] = L.coeff(0)
    for k in range(1, top + 1):
        ck = L.coeff(k)
        if ck.is_zero():
            continue
        for j, a in enumerate(chebyshev_t(k)):
            if a:
                out[j] = out[j] + ck * (2 * a)
    return XPoly(out)
