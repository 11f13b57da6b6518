"""Branch candidates and numeric monodromy of the roots of Omega.

Roots of the square-free part of Omega are followed along lasso paths from a
base point: out along a straight ray, once counterclockwise around a small
circle about the candidate, and back. Steps are bisected whenever the root
motion over a step is not small against the gaps between roots, so root
matching by nearest assignment stays unambiguous.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..algebra import Poly, TPoly, discriminant_T, squarefree_part

INF = "inf"


class CoincidentPathFailure(ArithmeticError):
    """Two tracked roots could not be separated at the minimum step size."""


class DeflationRequired(ValueError):
    """The discriminant vanishes identically: remove repeated factors first."""


# -- evaluating the cleared polynomial ----------------------------------------

@dataclass(frozen=True)
class ClearedOmega:
    """Square-free Omega as integer coefficients F[k](u) of T^k (denominators cleared)."""

    coeffs: tuple[np.ndarray, ...]  # each highest power of u first, for np.polyval

    @classmethod
    def from_tpoly(cls, P: TPoly) -> "ClearedOmega":
        F, _ = P.cleared()
        return cls(tuple(np.array(f.c[::-1] or (0,), dtype=float) for f in F))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def roots(self, u: complex) -> np.ndarray:
        c = np.array([np.polyval(f, u) for f in reversed(self.coeffs)], dtype=complex)
        # c is highest power of T first; drop vanishing leading terms
        scale = np.max(np.abs(c))
        k = 0
        while k < len(c) - 1 and abs(c[k]) <= 1e-14 * scale:
            k += 1
        r = np.roots(c[k:])
        # roots lost to a vanishing leading coefficient sit at infinity
        return np.concatenate([r, np.full(k, np.inf + 0j)]) if k else r


def chordal(a, b):
    """Chordal distance on the Riemann sphere; infinite entries allowed."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    ia, ib = ~np.isfinite(a), ~np.isfinite(b)
    with np.errstate(invalid="ignore", over="ignore"):
        d = np.abs(a - b) / (np.sqrt(1 + np.abs(a) ** 2) * np.sqrt(1 + np.abs(b) ** 2))
        d = np.where(ia & ib, 0.0, d)
        d = np.where(ia & ~ib, 1 / np.sqrt(1 + np.abs(np.where(ia, 0, b)) ** 2), d)
        d = np.where(ib & ~ia, 1 / np.sqrt(1 + np.abs(np.where(ib, 0, a)) ** 2), d)
    return d


def _min_gap(r: np.ndarray) -> float:
    if len(r) < 2:
        return math.inf
    d = chordal(r[:, None], r[None, :])
    d[np.diag_indices(len(r))] = math.inf
    return float(np.min(d))


# -- candidates ---------------------------------------------------------------

def _polish(p: Poly, z: complex, steps: int = 3) -> complex:
    dp = p.derivative()
    for _ in range(steps):
        d = complex(dp(z))
        if d == 0:
            break
        z = z - complex(p(z)) / d
    return z


def discriminant_zeros(P: TPoly, dedupe: float = 1e-8) -> list[complex]:
    """Finite zeros of the discriminant numerator of a square-free Omega."""
    D = discriminant_T(P)
    if D.is_zero():
        raise DeflationRequired("discriminant vanishes identically; deflate repeated factors first")
    sf = squarefree_part(D.num)
    if sf.degree < 1:
        return []
    # drop the factor u, since 0 is always a candidate anyway
    while sf.coeff(0) == 0:
        sf = Poly(sf.c[1:])
    if sf.degree < 1:
        return []
    raw = np.roots(np.array(sf.c[::-1], dtype=float))
    out: list[complex] = []
    for z in raw:
        z = _polish(sf, complex(z))
        if abs(z.imag) < 1e-13 * max(1.0, abs(z)):
            z = complex(z.real, 0.0)
        if all(abs(z - w) > dedupe for w in out):
            out.append(z)
    return sorted(out, key=_sort_key)


def _sort_key(z):
    if z == INF:
        return (math.inf, 0.0)
    a = cmath.phase(z) if z != 0 else 0.0
    return (round(abs(z), 12), round(a, 12))


def branch_candidates(P: TPoly) -> list:
    """Discriminant zeros plus the mandatory candidates 0 and infinity."""
    zs = [z for z in discriminant_zeros(P) if abs(z) > 1e-12]
    return [0j] + zs + [INF]


# -- paths ----------------------------------------------------------------------

@dataclass(frozen=True)
class Segment:
    a: complex
    b: complex

    def at(self, s: float) -> complex:
        return self.a + (self.b - self.a) * s


@dataclass(frozen=True)
class Arc:
    center: complex
    radius: float
    start: float  # angles in radians
    sweep: float

    def at(self, s: float) -> complex:
        return self.center + self.radius * cmath.exp(1j * (self.start + self.sweep * s))


@dataclass(frozen=True)
class InvertedArc:
    """u = 1/w with w on a small circle about 0 (loop about infinity)."""

    arc: Arc

    def at(self, s: float) -> complex:
        return 1 / self.arc.at(s)


def _ray_with_detours(a: complex, b: complex, obstacles: list[tuple[complex, float]]):
    """Straight path a -> b, replacing each crossing of an obstacle disk by
    the arc of its boundary on the left of the direction of travel."""
    direction = b - a
    length = abs(direction)
    if length == 0:
        return []
    e = direction / length
    hits = []
    for c, rho in obstacles:
        rel = (c - a) / e  # coordinates along / across the ray
        along, across = rel.real, rel.imag
        if abs(across) < rho and 0 < along < length:
            half = math.sqrt(rho * rho - across * across)
            if along - half > 0 and along + half < length:
                hits.append((along - half, along + half, c, rho))
    hits.sort(key=lambda h: h[0])
    pieces = []
    cur = a
    for enter, leave, c, rho in hits:
        p_in, p_out = a + e * enter, a + e * leave
        pieces.append(Segment(cur, p_in))
        t0 = cmath.phase(p_in - c)
        t1 = cmath.phase(p_out - c)
        # go around on the left: the arc whose midpoint is left of the ray
        sweep = (t1 - t0) % (2 * math.pi)
        mid = c + rho * cmath.exp(1j * (t0 + sweep / 2))
        if ((mid - a) / e).imag < 0:
            sweep -= 2 * math.pi
        pieces.append(Arc(c, rho, t0, sweep))
        cur = p_out
    pieces.append(Segment(cur, b))
    return pieces


def _reverse(pieces):
    out = []
    for p in reversed(pieces):
        if isinstance(p, Segment):
            out.append(Segment(p.b, p.a))
        elif isinstance(p, Arc):
            out.append(Arc(p.center, p.radius, p.start + p.sweep, -p.sweep))
        else:
            a = p.arc
            out.append(InvertedArc(Arc(a.center, a.radius, a.start + a.sweep, -a.sweep)))
    return out


def loop_radius(candidate, others: list, base: complex) -> float:
    """min(half the distance to the nearest other finite candidate, 0.1, half
    the distance to the base point)."""
    ds = [abs(candidate - o) for o in others if o != INF and o != candidate]
    r = min([0.1, 0.5 * abs(candidate - base)] + [0.5 * d for d in ds])
    return r


def lasso(candidate, candidates: list, base: complex):
    """Path pieces of a loop based at ``base`` winding once around ``candidate``."""
    finite = [c for c in candidates if c != INF]
    radii = {c: loop_radius(c, finite, base) for c in finite}
    if candidate == INF:
        R = max([10.0] + [2 * abs(c) for c in finite])
        # the circle |u| = R is w = 1/u on |w| = 1/R about w = 0
        start = cmath.phase(base) if base != 0 else 0.0
        entry = R * cmath.exp(1j * start)
        obstacles = [(c, 0.5 * radii[c]) for c in finite]
        out = _ray_with_detours(base, entry, obstacles)
        loop = [InvertedArc(Arc(0j, 1 / R, -start, 2 * math.pi))]
        return out + loop + _reverse(out)
    rho = radii[candidate]
    d = base - candidate
    theta = cmath.phase(d)
    entry = candidate + rho * d / abs(d)
    obstacles = [(c, 0.5 * radii[c]) for c in finite if c != candidate]
    out = _ray_with_detours(base, entry, obstacles)
    loop = [Arc(candidate, rho, theta, 2 * math.pi)]
    return out + loop + _reverse(out)


# -- tracking -----------------------------------------------------------------

def _match(prev: np.ndarray, new: np.ndarray) -> tuple[np.ndarray, float]:
    cost = chordal(prev[:, None], new[None, :])
    rows, cols = linear_sum_assignment(cost)
    order = np.empty(len(prev), dtype=int)
    order[rows] = cols
    return new[order], float(np.max(cost[rows, cols]))


def track(omega: ClearedOmega, pieces, roots: np.ndarray, steps: int = 64,
          min_step: float = 2.0 ** -40, safety: float = 3.0) -> np.ndarray:
    """Continue ``roots`` along the path; returns them in the same order."""
    cur = np.array(roots, dtype=complex)
    for piece in pieces:
        s, h = 0.0, 1.0 / steps
        while s < 1.0:
            h = min(h, 1.0 - s)
            u = piece.at(s + h)
            new, motion = _match(cur, omega.roots(u))
            gap = min(_min_gap(new), _min_gap(cur))
            if safety * motion >= gap:
                if h <= min_step:
                    raise CoincidentPathFailure(
                        f"coincident-path failure near u = {u:.6g}: root gap {gap:.3g}, "
                        f"step motion {motion:.3g} at step {h:.3g}")
                h /= 2
                continue
            cur = new
            s += h
            if safety * 4 * motion < gap:
                h *= 2
    return cur


def permutation_between(start: np.ndarray, end: np.ndarray) -> tuple[int, ...]:
    """perm[i] = j when the root that started as sheet i ended at sheet j."""
    cost = chordal(end[:, None], start[None, :])
    rows, cols = linear_sum_assignment(cost)
    if float(np.max(cost[rows, cols])) > 1e-6:
        raise CoincidentPathFailure("tracked roots did not return to the starting set")
    perm = [0] * len(start)
    for i, j in zip(rows, cols):
        perm[i] = int(j)
    return tuple(perm)


def monodromy_at(omega: ClearedOmega, candidate, candidates: list, base: complex,
                 base_roots: np.ndarray | None = None) -> tuple[int, ...]:
    """Sheet permutation of a loop around one candidate (0 and 'inf' allowed)."""
    if base_roots is None:
        base_roots = omega.roots(base)
    pieces = lasso(candidate, candidates, base)
    end = track(omega, pieces, base_roots)
    return permutation_between(base_roots, end)


def cycle_type(perm, subset=None) -> tuple[int, ...]:
    """Cycle lengths (descending) of perm restricted to an invariant subset."""
    items = sorted(subset) if subset is not None else range(len(perm))
    seen = set()
    out = []
    for i in items:
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))
