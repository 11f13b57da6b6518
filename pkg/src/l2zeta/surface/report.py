"""Sheets, branch points and genus of the Riemann surface carrying the zeta function."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..graph import VoltageGraph, graph_invariants
from ..zeta import PuData, pu_data, sheet_factor
from ..algebra import TPoly, deflate_repeated_factors, squarefree_part
from .monodromy import (INF, ClearedOmega, _polish, _ray_with_detours, _sort_key,
                        branch_candidates, cycle_type, loop_radius, monodromy_at, track)
from .omega import OmegaPoly, build_omega, sheet_values

BASE_POINT = 0.05


class BaseSheetAmbiguous(ArithmeticError):
    """Two sheets are too close at the base point to tell which one carries Z."""


@dataclass(frozen=True)
class BranchPoint:
    location: complex | str  # "inf" for the point at infinity
    cycle_structure: tuple[int, ...]
    branching_order: int

    def __post_init__(self):
        if self.branching_order < 1:
            raise ValueError("unbranched points are not branch points")
        if self.branching_order != sum(k - 1 for k in self.cycle_structure):
            raise ValueError("branching order must equal sum(cycle - 1)")


@dataclass
class SurfaceReport:
    d: int
    branch_points: list[BranchPoint]
    b: int
    genus: int
    galois: bool
    omega_irreducible: bool
    c_membership: list[bool] | None  # None for non-regular graphs
    sheets: int = 0  # roots of the square-free part of Omega
    repeated_factors: list[tuple[TPoly, int]] = field(default_factory=list)
    unbranched: list = field(default_factory=list)  # candidates with trivial monodromy on Phi
    base: complex = BASE_POINT
    notes: list[str] = field(default_factory=list)


# -- sheet bookkeeping --------------------------------------------------------

def base_sheet(pu: PuData, roots: np.ndarray, base: complex) -> int:
    """Index of the root that is W_{-...-} at the base point (principal branches)."""
    target = sheet_values(pu, base).value((-1,) * pu.n) if pu.n else 1.0
    dist = np.abs(roots - target)
    k = int(np.argmin(dist))
    others = [i for i in range(len(roots)) if i != k]
    if others and float(np.min(np.abs(roots[others] - roots[k]))) < 1e-9:
        raise BaseSheetAmbiguous(
            f"two sheets within 1e-9 at base point {base}; try a different base point")
    if dist[k] > 1e-6 * max(1.0, abs(target)):
        raise BaseSheetAmbiguous(f"no root of Omega matches W_(-...-) at base point {base}")
    return k


def orbit(start: int, perms) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        i = todo.pop()
        for p in perms:
            j = p[i]
            if j not in seen:
                seen.add(j)
                todo.append(j)
    return seen


def phi_component(perms, start: int) -> tuple[set[int], int]:
    """Orbit of the base sheet under the monodromy group, and its size d."""
    sheets = orbit(start, perms)
    return sheets, len(sheets)


def _restrict(perm, subset):
    idx = {s: i for i, s in enumerate(sorted(subset))}
    return tuple(idx[perm[s]] for s in sorted(subset))


def galois_check(perms, subset) -> bool:
    """True iff the monodromy group acts regularly on the component (|G| = d)."""
    d = len(subset)
    gens = [_restrict(p, subset) for p in perms]
    ident = tuple(range(d))
    group = {ident}
    todo = [ident]
    while todo:
        g = todo.pop()
        for h in gens:
            gh = tuple(h[g[i]] for i in range(d))
            if gh not in group:
                group.add(gh)
                if len(group) > d:
                    return False
                todo.append(gh)
    return len(group) == d


def in_c_set(u, q: int, tol: float = 1e-8) -> bool:
    """Membership in {|u| = q^-1/2} union [-1, -1/q] union [1/q, 1]."""
    if u == INF or abs(u) < tol:
        return False
    u = complex(u)
    if abs(abs(u) - q ** -0.5) <= tol:
        return True
    if abs(u.imag) <= tol and 1 / q - tol <= abs(u.real) <= 1 + tol:
        return True
    return False


def c_set_check(report: SurfaceReport, q: int | None) -> list[bool] | None:
    if q is None:
        report.notes.append("non-regular graph: C-set check skipped")
        return None
    return [in_c_set(bp.location, q) for bp in report.branch_points]


# -- the full pipeline ----------------------------------------------------------

@dataclass
class SurfaceData:
    """Intermediate results kept for reuse by other checks."""

    pu: PuData
    omega: OmegaPoly
    squarefree: TPoly
    cleared: ClearedOmega
    candidates: list
    perms: list[tuple[int, ...]]
    base: complex
    base_roots: np.ndarray
    base_index: int
    phi: set[int]


def analyze_surface(G: VoltageGraph, base: complex = BASE_POINT, symbolic: bool = True,
                    pu: PuData | None = None) -> tuple[SurfaceReport, SurfaceData]:
    pu = pu or pu_data(G)
    omega = build_omega(pu, symbolic=symbolic)
    om = omega.exact
    sq, repeated = deflate_repeated_factors(om)
    C = ClearedOmega.from_tpoly(sq)
    cands = branch_candidates(sq)
    base_roots = C.roots(base)
    start = base_sheet(pu, base_roots, base)
    perms = [monodromy_at(C, c, cands, base, base_roots) for c in cands]
    phi, d = phi_component(perms, start)
    everything = orbit(0, perms) if len(base_roots) else set()
    irreducible = not repeated and len(everything) == len(base_roots)
    bps, unbranched = [], []
    for c, p in zip(cands, perms):
        ct = cycle_type(p, phi)
        order = sum(k - 1 for k in ct)
        if order:
            bps.append(BranchPoint(c, ct, order))
        else:
            unbranched.append(c)
    b = sum(bp.branching_order for bp in bps)
    report = SurfaceReport(
        d=d, branch_points=bps, b=b, genus=b // 2 - d + 1,
        galois=galois_check(perms, phi), omega_irreducible=irreducible,
        c_membership=None, sheets=len(base_roots), repeated_factors=repeated,
        unbranched=unbranched, base=base)
    if b % 2:
        report.notes.append("total branching order is odd; the monodromy data are inconsistent")
    _, q = graph_invariants(G)
    report.c_membership = c_set_check(report, q)
    data = SurfaceData(pu, omega, sq, C, cands, perms, base, base_roots, start, phi)
    if q is not None and not irreducible:
        stable = tau_stable(G, data, q)
        report.notes.append("Phi-component is %sstable under u -> 1/(qu)" % ("" if stable else "not "))
    return report, data


def surface_report(G: VoltageGraph, **kw) -> SurfaceReport:
    return analyze_surface(G, **kw)[0]


# -- functional equation ------------------------------------------------------

def functional_factor(G: VoltageGraph, q: int, u0: complex) -> complex:
    """q^(2e-v) u^(2e) ((1-u^2)/(q^2 u^2 - 1))^-chi."""
    v, e, chi = G.v, G.e, G.chi
    return q ** (2 * e - v) * u0 ** (2 * e) * ((1 - u0 * u0) / (q * q * u0 * u0 - 1)) ** (-chi)


def _multiset_residual(a, b) -> float:
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    scale = np.maximum(np.maximum(np.abs(a)[:, None], np.abs(b)[None, :]), 1e-300)
    cost = np.abs(a[:, None] - b[None, :]) / scale
    rows, cols = linear_sum_assignment(cost)
    return float(np.max(cost[rows, cols]))


def zeta_sheet_values(G: VoltageGraph, pu: PuData, u0: complex) -> np.ndarray:
    """All 2^n candidate values (1-u^2)^chi 2^n/alpha W_I of Z at u0."""
    W = np.array(sheet_values(pu, u0).W)
    return sheet_factor(pu, G.chi, u0) * W


def functional_eq_check(G: VoltageGraph, samples, pu: PuData | None = None) -> float:
    """Max multiset-matching residual of the functional equation over samples."""
    _, q = graph_invariants(G)
    if q is None:
        raise ValueError("functional equation needs a regular graph")
    pu = pu or pu_data(G)
    worst = 0.0
    for u0 in samples:
        u0 = complex(u0)
        here = zeta_sheet_values(G, pu, u0) * functional_factor(G, q, u0)
        there = zeta_sheet_values(G, pu, 1 / (q * u0))
        worst = max(worst, _multiset_residual(there, here))
    return worst


def alpha_scaling_residual(G: VoltageGraph, q: int, u0: complex, pu: PuData | None = None) -> float:
    """|alpha(1/(q u)) (q u^2)^v / alpha(u) - 1|."""
    pu = pu or pu_data(G)
    u0 = complex(u0)
    return abs(pu.alpha(1 / (q * u0)) * (q * u0 * u0) ** G.v / pu.alpha(u0) - 1)


def tau_stable(G: VoltageGraph, data: SurfaceData, q: int, tol: float = 1e-8) -> bool:
    """Whether u -> 1/(qu) maps the Phi-component to itself.

    The Phi roots at the base point are continued to 1/(q base) and their
    zeta values compared, as a multiset, with the functional-equation image
    of the Phi values at the base point.
    """
    b = data.base
    far = 1 / (q * b)
    finite = [c for c in data.candidates if c != INF]
    obstacles = [(c, 0.5 * loop_radius(c, finite, b)) for c in finite]
    # leave the real axis first so the path does not run through real candidates
    mid = b + 0.5j * abs(far - b)
    path = _ray_with_detours(b, mid, obstacles) + _ray_with_detours(mid, far, obstacles)
    end = track(data.cleared, path, data.base_roots)
    idx = sorted(data.phi)
    pu = data.pu
    here = sheet_factor(pu, G.chi, b) * data.base_roots[idx] * functional_factor(G, q, b)
    there = sheet_factor(pu, G.chi, far) * end[idx]
    return _multiset_residual(there, here) < tol


# -- poles of the quotient zeta function --------------------------------------

@dataclass(frozen=True)
class PolePoint:
    u: complex
    candidate: bool
    branched: bool


def quotient_pole_compare(G: VoltageGraph, report: SurfaceReport | None = None,
                          data: SurfaceData | None = None) -> list[PolePoint]:
    """Zeros of P_u(1) in u, each with candidate and branching status."""
    if report is None or data is None:
        report, data = analyze_surface(G)
    p1 = squarefree_part(data.pu.P.value_at_x(1))
    out = []
    if p1.degree < 1:
        return out
    for z in np.roots(np.array(p1.c[::-1], dtype=float)):
        z = _polish(p1, complex(z))
        if abs(z.imag) < 1e-13 * max(1.0, abs(z)):
            z = complex(z.real, 0.0)
        cand = any(c != INF and abs(c - z) < 1e-8 for c in data.candidates)
        branched = any(bp.location != INF and abs(bp.location - z) < 1e-8
                       for bp in report.branch_points)
        out.append(PolePoint(z, cand, branched))
    return sorted(out, key=lambda p: _sort_key(p.u))
