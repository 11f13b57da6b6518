"""Rational functions of ``u`` kept in lowest terms."""

from __future__ import annotations

from math import gcd

from .poly import ONE, Poly, poly_divmod_q, poly_gcd


class RationalFn:
    """``num/den`` with integer polynomials, reduced after every operation.

    Normal form: gcd(num, den) is constant, the integer contents of num and
    den are coprime, and den has a positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        if isinstance(num, int):
            num = Poly.const(num)
        if den is None:
            den = ONE
        elif isinstance(den, int):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_int(cls, a: int) -> "RationalFn":
        return cls(Poly.const(a), ONE, reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.is_const()

    def __add__(self, other):
        other = _coerce(other)
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalFn(Poly(), ONE, reduced=True)
        # cross-cancel first to keep intermediates small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        a = _exq(self.num, g1) * _exq(other.num, g2)
        b = _exq(self.den, g2) * _exq(other.den, g1)
        return RationalFn(a, b)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFn(self.num ** k, self.den ** k, reduced=True)

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __repr__(self):
        return f"RationalFn({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _coerce(x) -> RationalFn:
    if isinstance(x, RationalFn):
        return x
    if isinstance(x, int):
        return RationalFn.from_int(x)
    if isinstance(x, Poly):
        return RationalFn(x, ONE, reduced=True)
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalFn")


def _exq(a: Poly, g: Poly) -> Poly:
    if g.is_const():
        return a
    q, r = poly_divmod_q(a, g)
    assert not r
    # g is primitive and divides a over Q, so by Gauss the quotient is integral
    return Poly(int(x) for x in q)


def _reduce(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if num.is_zero():
        return Poly(), ONE
    g = poly_gcd(num, den)
    if not g.is_const():
        num, den = _exq(num, g), _exq(den, g)
    c = gcd(num.content(), den.content())
    if den.lc < 0:
        c = -c
    if c != 1:
        num = Poly(a // c for a in num.c)
        den = Poly(a // c for a in den.c)
    return num, den
