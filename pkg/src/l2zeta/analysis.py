"""The full analysis pipeline, collected into a JSON-ready report."""

from __future__ import annotations

from .census import CensusTooLarge, geodesic_census, series_from_census
from .graph import VoltageGraph, graph_invariants
from .reportio import SCHEMA_VERSION
from .surface import (INF, alpha_scaling_residual, analyze_surface, functional_eq_check,
                      quotient_pole_compare)
from .zeta import closed_form_taylor, pu_data, theta_integral_det, zeta_closed_form

FE_SAMPLES = (0.08, 0.05 + 0.03j, -0.06 + 0.02j, 0.04 - 0.07j, 0.09j)
ORACLE_U = 0.05 + 0.02j
ONE_PROBES = (0.05, 0.03 + 0.04j, -0.07 + 0.02j)


def theta_residual(G: VoltageGraph, u0: complex, samples: int = 64) -> dict:
    """Relative gap between the closed form and the circle-average determinant."""
    z = zeta_closed_form(G, u0)
    th = theta_integral_det(G, u0, samples=samples)
    inv = 1 / z.value
    other = (1 - u0 * u0) ** (-G.chi) * th.value
    return {"u": complex(u0), "closed_form_inverse": inv, "theta": other,
            "residual": abs(inv - other) / abs(inv), "samples": th.samples,
            "converged": th.converged}


def census_residual(G: VoltageGraph, L: int = 8) -> dict:
    """Closed-form Taylor coefficients against the geodesic census, up to degree L."""
    try:
        census = geodesic_census(G, L)
    except CensusTooLarge as exc:
        return {"length": L, "skipped": str(exc)}
    series = series_from_census(census)
    taylor = closed_form_taylor(G, L)
    rounded = [int(round(c.real)) for c in taylor]
    off_integer = float(max(abs(c - r) for c, r in zip(taylor, rounded)))
    return {"length": L, "census_counts": list(census.counts), "census_series": series,
            "closed_form_series": rounded,
            "max_abs_difference": max(abs(a - b) for a, b in zip(series, rounded)),
            "rounding_error": off_integer}


def zeta_is_one(G: VoltageGraph) -> bool:
    return all(abs(zeta_closed_form(G, u).value - 1) < 1e-12 for u in ONE_PROBES)


def _location(z):
    return INF if z == INF else complex(z)


def analyze(G: VoltageGraph, symbolic: bool = True, oracles: bool = True,
            geodesic_len: int = 8) -> dict:
    chi, q = graph_invariants(G)
    pu = pu_data(G)
    surface, data = analyze_surface(G, symbolic=symbolic, pu=pu)
    cm = surface.c_membership or [None] * len(surface.branch_points)
    report = {
        "schema": SCHEMA_VERSION,
        "graph": {"v": G.v, "e": G.e, "chi": chi,
                  "q": q if q is not None else "non-regular", **G.to_json()},
        "P_u": {"n": pu.n, "x_coefficients": [list(c.c) for c in pu.P.coeffs]},
        "alpha": list(pu.alpha.c),
        "sigma": [s for s in pu.sigmas()],
        "omega": {"method": "power-sums" if data.omega.symbolic is not None else "sampled",
                  "coefficients": data.omega.exact,
                  "repeated_factors": [{"factor": f, "multiplicity": k}
                                       for f, k in surface.repeated_factors]},
        "surface": {
            "d": surface.d, "b": surface.b, "genus": surface.genus,
            "galois": surface.galois, "omega_irreducible": surface.omega_irreducible,
            "sheets": surface.sheets, "base_point": complex(surface.base),
            "branch_points": [
                {"location": _location(bp.location), "cycle_structure": list(bp.cycle_structure),
                 "branching_order": bp.branching_order, "in_C": c}
                for bp, c in zip(surface.branch_points, cm)],
            "unbranched_candidates": [_location(c) for c in surface.unbranched],
            "notes": list(surface.notes),
        },
        "quotient_poles": [{"u": p.u, "candidate": p.candidate, "branched": p.branched}
                           for p in quotient_pole_compare(G, surface, data)],
        "zeta_identically_one": zeta_is_one(G),
    }
    if q is not None:
        report["functional_equation"] = {
            "samples": [complex(u) for u in FE_SAMPLES],
            "residual": functional_eq_check(G, FE_SAMPLES, pu=pu),
            "alpha_scaling_residual": max(alpha_scaling_residual(G, q, u, pu) for u in FE_SAMPLES),
        }
    else:
        report["functional_equation"] = None
    if oracles:
        report["oracles"] = {"theta": theta_residual(G, ORACLE_U),
                             "census": census_residual(G, geodesic_len)}
    return report
