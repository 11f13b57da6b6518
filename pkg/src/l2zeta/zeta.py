"""Numeric evaluation of the L2 zeta function of a Z-periodic graph.

``zeta_closed_form`` uses the root formula

    Z(u)^-1 = (1-u^2)^(-chi) * alpha(u)/2^n * prod_i (r_i + sqrt(r_i+1) sqrt(r_i-1))

with principal square roots, where det(I - delta u + Q u^2) = P_u((t+1/t)/2)
and P_u(x) = alpha(u) prod_i (r_i(u) - x).

``theta_integral_det`` is an independent route: the von Neumann determinant
over Z is exp of the circle average of log det M_u(theta), with t = e^{i theta}.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import Poly, RationalFn, TPoly, XPoly, laurent_det, to_x_basis, yun_factors
from .graph import VoltageGraph, build_delta_u, delta_u_numeric


class DegenerateLeadingCoefficient(ValueError):
    """alpha(u0) vanishes, so P_u0 drops degree and the root formula breaks."""


class IntegrandSingularity(ValueError):
    """det M_u(theta) (nearly) vanishes on the quadrature grid."""


def psqrt(z: complex) -> complex:
    """Principal square root exp(log(z)/2), with arg in (-pi, pi]."""
    z = complex(z)
    if z.imag == 0.0:
        # -0.0 imaginary parts would otherwise select the lower branch
        z = complex(z.real, 0.0)
    return cmath.sqrt(z)


def plog(z: complex) -> complex:
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.log(z)


@dataclass(frozen=True)
class PuData:
    P: XPoly
    n: int
    alpha: Poly
    # square-free factorization of P_u in x, so repeated roots stay accurate
    factors: tuple[tuple[TPoly, int], ...] = ()

    def sigma(self, i: int) -> RationalFn:
        """i-th elementary symmetric function of the roots r_1..r_n."""
        c = self.P.coeffs[self.n - i]
        s = RationalFn(c, self.alpha)
        return s if (self.n - i) % 2 == 0 else -s

    def sigmas(self) -> list[RationalFn]:
        return [self.sigma(i) for i in range(1, self.n + 1)]

    def r_function(self) -> RationalFn:
        """The single root r(u) when n == 1."""
        if self.n != 1:
            raise ValueError("r(u) is a single rational function only when n == 1")
        return self.sigma(1)


def pu_data(G: VoltageGraph) -> PuData:
    L = laurent_det(build_delta_u(G).matrix)
    P = to_x_basis(L)
    n = P.degree
    alpha = P.leading * (-1) ** n
    factors = tuple(yun_factors(TPoly(list(P.coeffs)))) if n else ()
    return PuData(P, n, alpha, factors)


def _alpha_degenerate(pu: PuData, u0: complex) -> bool:
    a = pu.alpha(u0)
    scale = sum(abs(c) for c in pu.alpha.c) * max(1.0, abs(u0)) ** max(pu.alpha.degree, 0)
    return abs(a) <= 1e-13 * scale


@dataclass(frozen=True)
class RootSet:
    u0: complex
    roots: tuple[complex, ...]


def roots_at(pu: PuData, u0: complex) -> RootSet:
    """Roots r_i(u0) of P_u0(x), repeated by multiplicity.

    Each square-free factor is solved by companion eigenvalues plus one Newton
    step, so a repeated factor does not cost half the working precision.
    """
    u0 = complex(u0)
    if _alpha_degenerate(pu, u0):
        raise DegenerateLeadingCoefficient(f"degenerate leading coefficient: alpha({u0}) = 0")
    if pu.n == 0:
        return RootSet(u0, ())
    factors = pu.factors or ((TPoly(list(pu.P.coeffs)), 1),)
    polished = []
    for fac, k in factors:
        hi_first = np.array(fac.at_u(u0), dtype=complex)[::-1]
        dcoeffs = np.polyder(hi_first)
        for r in np.roots(hi_first):
            d = np.polyval(dcoeffs, r)
            if d != 0:
                r = r - np.polyval(hi_first, r) / d
            polished.extend([complex(r)] * k)
    return RootSet(u0, tuple(polished))


@dataclass
class ZetaEval:
    u: complex
    value: complex
    in_validity_region: bool = True
    limit_value: bool = False
    notes: list[str] = field(default_factory=list)


def validity_check(pu: PuData, roots: RootSet, grid: int = 64) -> list[str]:
    """Empty list when u0 passes the per-evaluation checks, else reasons."""
    notes = []
    for r in roots.roots:
        if abs(r.imag) <= 1e-12 * max(1.0, abs(r)) and abs(r.real) <= 1.0:
            notes.append(f"root {r:.6g} lies on [-1, 1]; principal branch is ambiguous")
    xs = np.linspace(-1.0, 1.0, grid)
    vals = np.array([pu.P(roots.u0, x) for x in xs])
    if np.any(vals.real <= 0):
        notes.append("Re P_u(x) is not positive on [-1, 1]")
    return notes


def sheet_factor(pu: PuData, chi: int, u0: complex) -> complex:
    """(1-u^2)^chi 2^n / alpha(u): maps a root W of Omega to a zeta value."""
    return (1 - u0 * u0) ** chi * 2 ** pu.n / pu.alpha(u0)


def zeta_closed_form(G: VoltageGraph, u0: complex, pu: PuData | None = None) -> ZetaEval:
    u0 = complex(u0)
    if u0 == 0:
        return ZetaEval(u0, 1.0 + 0j, limit_value=True,
                        notes=["u = 0: returning the limit value 1"])
    pu = pu or pu_data(G)
    rs = roots_at(pu, u0)
    notes = validity_check(pu, rs)
    prod = 1.0 + 0j
    for r in rs.roots:
        prod *= r + psqrt(r + 1) * psqrt(r - 1)
    inv = (1 - u0 * u0) ** (-G.chi) * pu.alpha(u0) / 2 ** pu.n * prod
    return ZetaEval(u0, 1.0 / inv, in_validity_region=not notes, notes=notes)


def zeta(G: VoltageGraph, u0: complex) -> complex:
    return zeta_closed_form(G, u0).value


@dataclass(frozen=True)
class ThetaResult:
    value: complex
    samples: int
    converged: bool
    winding: int


def _theta_average(G: VoltageGraph, u0: complex, N: int) -> tuple[complex, int]:
    theta = 2 * np.pi * np.arange(N) / N
    t = np.exp(1j * theta)
    n = G.v
    M = np.zeros((N, n, n), dtype=complex)
    for e in G.edges:
        M[:, e.src, e.dst] -= u0 * t ** e.shift
        M[:, e.dst, e.src] -= u0 * t ** (-e.shift)
    for i, q in enumerate(G.q_values()):
        M[:, i, i] += 1 + q * u0 * u0
    d = np.linalg.det(M)
    scale = max(1.0, float(np.max(np.abs(d))))
    small = np.abs(d) < 1e-12 * scale
    if np.any(small):
        k = int(np.argmax(small))
        raise IntegrandSingularity(f"integrand singularity near theta = {theta[k]:.6g}")
    phase = np.unwrap(np.angle(d))
    # closing the loop: total phase change is 2 pi * winding
    closing = np.angle(d[0] / d[-1])
    winding = int(round((phase[-1] + closing - phase[0]) / (2 * np.pi)))
    logs = np.log(np.abs(d)) + 1j * phase
    return complex(np.mean(logs)), winding


def theta_integral_det(G: VoltageGraph, u0: complex, samples: int = 64,
                       tol: float = 1e-10, max_samples: int = 2 ** 20) -> ThetaResult:
    """exp of the circle average of log det M_u0(theta), by periodic trapezoid.

    The log is unwrapped continuously in theta. Sample count doubles from
    ``samples`` until successive answers agree to ``tol`` (relative).
    """
    if samples < 64:
        raise ValueError("theta_integral_det needs at least 64 samples")
    u0 = complex(u0)
    N = samples
    prev, winding = _theta_average(G, u0, N)
    while True:
        if 2 * N > max_samples:
            return ThetaResult(cmath.exp(prev), N, False, winding)
        cur, winding = _theta_average(G, u0, 2 * N)
        N *= 2
        if abs(cmath.exp(cur) - cmath.exp(prev)) <= tol * max(1.0, abs(cmath.exp(cur))):
            return ThetaResult(cmath.exp(cur), N, True, winding)
        prev = cur


def det_numeric(G: VoltageGraph, u0: complex, t: complex) -> complex:
    return complex(np.linalg.det(delta_u_numeric(G, u0, t)))


# -- the circle integral of log(r - cos theta) -------------------------------

def arccosh_rhs(r: complex) -> complex:
    """arccosh(r) - log 2 on the principal branch, via log(r + sqrt sqrt)."""
    r = complex(r)
    return plog(r + psqrt(r + 1) * psqrt(r - 1)) - math.log(2)


def _on_segment(r: complex) -> bool:
    return r.imag == 0.0 and -1.0 <= r.real <= 1.0


def _trapezoid_log(r: complex, N: int) -> complex:
    theta = 2 * np.pi * (np.arange(N) + 0.5) / N
    z = r - np.cos(theta) + 0j
    return complex(np.mean(np.log(z)))


def _tanh_sinh(level: int, tmax: float = 3.2):
    """Nodes as (offset from left end, offset from right end) on [0, 1], weights."""
    h = 2.0 ** (-level)
    k = np.arange(-int(round(tmax / h)), int(round(tmax / h)) + 1)
    s = k * h
    y = 0.5 * np.pi * np.sinh(s)
    from_left = 1.0 / (1.0 + np.exp(-2.0 * y))
    from_right = 1.0 / (1.0 + np.exp(2.0 * y))
    w = h * 0.5 * np.pi * np.cosh(s) / np.cosh(y) ** 2 / 2.0
    return from_left, from_right, w


def _segment_log(r: float, level: int) -> complex:
    # r = cos(phi); split the circle at the two zeros theta = +-phi, where
    # |r - cos theta| = 2 sin(da/2) sin(db/2) with da, db the distances to the
    # interval ends, and arg(r - cos theta) = pi exactly on (-phi, phi)
    phi = math.acos(max(-1.0, min(1.0, r)))
    left, right, w = _tanh_sinh(level)
    total = 0j
    for a, b, arg in ((-phi, phi, math.pi), (phi, 2 * math.pi - phi, 0.0)):
        length = b - a
        if length <= 0:
            continue
        da, db = length * left, length * right
        with np.errstate(divide="ignore"):
            f = math.log(2) + np.log(np.sin(da / 2)) + np.log(np.sin(db / 2))
        f = np.where(np.isfinite(f), f, 0.0)
        total += length * float(np.sum(w * f)) + 1j * arg * length
    return total / (2 * math.pi)


def arccosh_integral_check(r: complex, samples: int = 64, tol: float = 1e-12,
                           max_samples: int = 2 ** 16) -> tuple[complex, complex]:
    """Circle average of log(r - cos theta) next to arccosh(r) - log 2.

    Off [-1, 1] the integrand is smooth and periodic, so the trapezoid rule is
    used with doubling. On the segment it has two log singularities; there the
    circle is split at them and each piece is integrated by tanh-sinh.
    """
    if samples < 64:
        raise ValueError("arccosh_integral_check needs at least 64 samples")
    r = complex(r)
    rhs = arccosh_rhs(r)
    if _on_segment(r):
        level, prev = 2, _segment_log(r.real, 2)
        while True:
            level += 1
            n_nodes = 2 * (2 * int(round(3.2 * 2 ** level)) + 1)
            if n_nodes > max_samples:
                return prev, rhs
            cur = _segment_log(r.real, level)
            if abs(cur - prev) <= tol:
                return cur, rhs
            prev = cur
    N = samples
    prev = _trapezoid_log(r, N)
    while 2 * N <= max_samples:
        N *= 2
        cur = _trapezoid_log(r, N)
        if abs(cur - prev) <= tol:
            return cur, rhs
        prev = cur
    return prev, rhs


# -- Taylor coefficients of the closed form ----------------------------------

def closed_form_taylor(G: VoltageGraph, degree: int, radius: float = 0.1,
                       points: int = 256) -> np.ndarray:
    """Taylor coefficients of Z at 0 by the discrete Cauchy integral.

    Z is sampled on |u| = radius with the closed formula and the coefficients
    are read off with an FFT; aliasing is of order radius^points.
    """
    pu = pu_data(G)
    us = radius * np.exp(2j * np.pi * np.arange(points) / points)
    vals = np.array([zeta_closed_form(G, u, pu).value for u in us])
    coef = np.fft.fft(vals) / points
    return np.array([coef[k] / radius ** k for k in range(degree + 1)])
