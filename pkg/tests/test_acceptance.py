"""Acceptance criteria, one test each; a pass/fail line per criterion is
printed in the terminal summary."""

import cmath
import math
import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import conftest
from l2zeta.algebra import Poly, RationalFn, deflate_repeated_factors
from l2zeta.analysis import FE_SAMPLES, census_residual, theta_residual
from l2zeta.fixtures import NAMES, load_fixture
from l2zeta.graph import graph_invariants
from l2zeta.surface import (INF, alpha_scaling_residual, analyze_surface, branch_candidates,
                            functional_eq_check, omega_symbolic, quotient_pole_compare,
                            sheet_values)
from l2zeta.surface.report import _multiset_residual
from l2zeta.zeta import arccosh_integral_check, pu_data, zeta

S3 = 1 / math.sqrt(3)


def record(k, title, check, limit=None):
    t0 = time.perf_counter()
    try:
        detail = check() or ""
    except BaseException as exc:
        msg = (str(exc).splitlines() or [type(exc).__name__])[0]
        conftest.ACCEPTANCE[k] = f"FAIL  {k}. {title}: {msg}"
        raise
    dt = time.perf_counter() - t0
    if limit is not None and dt >= limit:
        conftest.ACCEPTANCE[k] = f"FAIL  {k}. {title}: took {dt:.1f}s, limit {limit}s"
        pytest.fail(f"runtime {dt:.1f}s over {limit}s")
    conftest.ACCEPTANCE[k] = f"PASS  {k}. {title} ({dt:.2f}s) {detail}".rstrip()


def same_set(found, expected, tol=1e-8):
    found = [complex(z) for z in found]
    if len(found) != len(expected):
        return False
    cost = np.abs(np.subtract.outer(np.array(found), np.array(expected, dtype=complex)))
    return bool(np.all(cost.min(axis=0) < tol) and np.all(cost.min(axis=1) < tol))


def rf(num, den):
    return RationalFn(Poly(num), Poly(den))


def test_criterion_1_line():
    def check():
        G = load_fixture("line")
        worst = 0.0
        for rad in np.linspace(0.05, 0.85, 10):
            for k in range(5):
                u = rad * cmath.exp(2j * math.pi * (k + 0.3) / 5)
                worst = max(worst, abs(zeta(G, u) - 1))
        assert worst < 1e-10, f"max |Z - 1| = {worst:.3g}"
        rep, _ = analyze_surface(G)
        assert rep.d == 1, f"d = {rep.d}"
        return f"max |Z-1| = {worst:.1e}, d = 1"
    record(1, "line fixture: Z = 1 and d = 1", check, limit=1.0)


def test_criterion_2_arccosh_integral():
    def check():
        rng = np.random.default_rng(2)
        seg = list(np.linspace(-1, 1, 10))
        rad = 3 * np.sqrt(rng.random(90))
        ang = 2 * np.pi * rng.random(90)
        rs = seg + list(rad * np.exp(1j * ang))
        worst = 0.0
        for r in rs:
            lhs, rhs = arccosh_integral_check(r, max_samples=2 ** 16)
            worst = max(worst, abs(lhs - rhs))
        assert worst < 1e-6, f"max error {worst:.3g}"
        return f"100 values, max error {worst:.1e}"
    record(2, "circle average of log(r - cos) vs arccosh", check, limit=5.0)


# branch sets: row 1 from the text, rows 4 and 5 derived from r(u) = +-1
ROWS = {
    "graph1": (rf((1, -2, 3), (0, 2)), [1, 1 / 3, 1j * S3, -1j * S3]),
    "graph4": (rf((1, 0, 3), (0, 4)), [1, -1, 1 / 3, -1 / 3]),
    "graph5": (rf((1, 0, 3), (0, 4)), [1, -1, 1 / 3, -1 / 3]),
}


def test_criterion_3_degree_one_table():
    def check():
        for name, (r, bps) in ROWS.items():
            G = load_fixture(name)
            assert pu_data(G).r_function() == r, f"{name}: r(u) differs"
            rep, _ = analyze_surface(G)
            assert same_set([bp.location for bp in rep.branch_points], bps), \
                f"{name}: branch points {[bp.location for bp in rep.branch_points]}"
            assert rep.genus == 1, f"{name}: genus {rep.genus}"
        G = load_fixture("graph3")
        rep, data = analyze_surface(G)
        r3 = pu_data(G).r_function()
        target = [complex(-0.25, math.sqrt(7) / 4), complex(-0.25, -math.sqrt(7) / 4)]
        for z in target:
            assert abs(r3(z) - 1) < 1e-10
        hits = [p for p in quotient_pole_compare(G, rep, data)
                if min(abs(p.u - z) for z in target) < 1e-8]
        assert len(hits) == 2 and all(not p.branched for p in hits), "row 3 pole points"
        assert all(any(c != INF and abs(c - z) < 1e-8 for c in rep.unbranched) for z in target)
        G = load_fixture("graph6")
        assert graph_invariants(G)[1] is None
        rep, _ = analyze_surface(G)
        assert rep.c_membership is None and any("C-set check skipped" in n for n in rep.notes)
        return "rows 1, 4, 5 genus 1; row 3 poles unbranched; row 6 non-regular"
    record(3, "degree-one table rows", check, limit=10.0)


def test_criterion_4_sawtooth():
    def check():
        G = load_fixture("sawtooth")
        om = omega_symbolic(pu_data(G))
        outer = rf((-1, 0, -4, 0, -9), (0, 0, 1))
        mid = rf((2, 4, 15, 12, 18), (0, 0, 1))
        one = RationalFn.from_int(1)
        assert list(om.coeffs) == [one, outer, mid, outer, one], "Omega differs"
        rep, _ = analyze_surface(G)
        by_type = {}
        for bp in rep.branch_points:
            by_type.setdefault(bp.cycle_structure, []).append(bp.location)
        assert set(by_type) == {(2, 2), (2, 1, 1)}
        assert same_set(by_type[(2, 2)], [1, 1 / 3, 1j * S3, -1j * S3])
        twos = by_type[(2, 1, 1)]
        assert INF in twos
        s = math.sqrt(111) / 24
        assert same_set([z for z in twos if z != INF], [0, complex(-3 / 8, s), complex(-3 / 8, -s)])
        assert len(rep.unbranched) == 4
        assert (rep.d, rep.b, rep.genus) == (4, 12, 3)
        assert rep.galois is False
        flags = {bp.location if bp.location == INF else complex(bp.location): c
                 for bp, c in zip(rep.branch_points, rep.c_membership)}
        assert flags[INF] is False and flags[0j] is False
        return "d = 4, b = 12, genus 3, not Galois"
    record(4, "sawtooth surface", check, limit=30.0)


TRILADDER_EXPECTED = (
    [1 / 3, 1, 1j * S3, -1j * S3,
     complex(-0.5, math.sqrt(3) / 6), complex(-0.5, -math.sqrt(3) / 6)]
    + [complex(a, b * math.sqrt(11)) / 6 for a in (1, -1) for b in (1, -1)]
    + [complex(-0.25 + math.sqrt(7 / 3) / 4, s * 0.5 * math.sqrt(0.5 + math.sqrt(7 / 3) / 2))
       for s in (1, -1)]
)


def test_criterion_5_triladder():
    def check():
        G = load_fixture("triladder")
        pu = pu_data(G)
        _, rep_factors = deflate_repeated_factors(omega_symbolic(pu))
        assert [(f.degree, k) for f, k in rep_factors] == [(2, 2)], "deflation"
        rep, data = analyze_surface(G, pu=pu)
        assert rep.d == 4, f"d = {rep.d}"
        assert all(bp.branching_order == 2 for bp in rep.branch_points)
        # every expected point is at least a discriminant zero
        for z in TRILADDER_EXPECTED:
            assert any(c != INF and abs(c - z) < 1e-8 for c in data.candidates), z
        found = [bp.location for bp in rep.branch_points]
        assert same_set(found, TRILADDER_EXPECTED) and rep.genus == 9, (
            f"{len(found)} branch points and genus {rep.genus}, expected 12 and 9; "
            "the points where r1 = 0 and the pair near 0.132 +- 0.562i are collisions "
            "of sheet values with trivial monodromy")
    record(5, "triladder surface", check, limit=60.0)


def test_criterion_6_oracle_equivalence():
    def check():
        rng = np.random.default_rng(6)
        worst = 0.0
        for name in NAMES:
            G = load_fixture(name)
            for _ in range(10):
                u0 = 0.1 * math.sqrt(rng.uniform(1e-4, 1)) * cmath.exp(2j * math.pi * rng.random())
                worst = max(worst, theta_residual(G, u0)["residual"])
        assert worst < 1e-8, f"max residual {worst:.3g}"
        return f"{10 * len(NAMES)} points, max residual {worst:.1e}"
    record(6, "closed form vs circle-average determinant", check)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(NAMES), st.floats(1e-3, 0.1), st.floats(0, 2 * math.pi))
def test_criterion_6_property(name, rad, ang):
    u0 = rad * cmath.exp(1j * ang)
    assert theta_residual(load_fixture(name), u0)["residual"] < 1e-8


def test_criterion_7_census():
    def check():
        for name in ("line", "graph1", "sawtooth"):
            res = census_residual(load_fixture(name), 8)
            assert res["census_series"] == res["closed_form_series"], name
        return "line, graph #1, sawtooth agree through degree 8"
    record(7, "geodesic census vs Taylor coefficients", check, limit=120.0)


def test_criterion_8_functional_equation():
    def check():
        worst_fe = worst_a = 0.0
        for name in ("graph1", "sawtooth"):
            G = load_fixture(name)
            _, q = graph_invariants(G)
            worst_fe = max(worst_fe, functional_eq_check(G, FE_SAMPLES))
            worst_a = max(worst_a, max(alpha_scaling_residual(G, q, u) for u in FE_SAMPLES))
        assert worst_fe < 1e-8, f"functional equation residual {worst_fe:.3g}"
        assert worst_a < 1e-10, f"alpha scaling residual {worst_a:.3g}"
        return f"residuals {worst_fe:.1e} and {worst_a:.1e}"
    record(8, "functional equation", check)


def test_criterion_9_properties():
    def check():
        rng = np.random.default_rng(9)
        for name in NAMES:
            G = load_fixture(name)
            pu = pu_data(G)
            om = omega_symbolic(pu)
            assert list(om.coeffs) == list(om.coeffs)[::-1], f"{name}: not palindromic"
            for _ in range(20):
                u0 = complex(*rng.uniform(-0.5, 0.5, 2))
                W = np.array(sheet_values(pu, u0).W)
                assert _multiset_residual(W, 1 / W) < 1e-8, f"{name} at {u0}"
                c = np.poly(W)
                assert np.max(np.abs(c - c[::-1])) < 1e-8 * np.max(np.abs(c))
            for _ in range(20):
                pot = [int(k) for k in rng.integers(-5, 6, G.v)]
                assert pu_data(G.relift(pot)).P == pu.P, f"{name}: lift changes P_u"
        G = load_fixture("sawtooth")
        a, _ = analyze_surface(G, base=0.05)
        b, _ = analyze_surface(G, base=0.04 + 0.015j)
        def by_type(rep):
            out = {}
            for bp in rep.branch_points:
                out.setdefault(bp.cycle_structure, []).append(bp.location)
            return out
        ta, tb = by_type(a), by_type(b)
        assert set(ta) == set(tb), "cycle structures depend on the base point"
        for ct in ta:
            assert (INF in ta[ct]) == (INF in tb[ct])
            assert same_set([z for z in ta[ct] if z != INF], [z for z in tb[ct] if z != INF])
        return "palindromic, reciprocal, lift-invariant, base-point independent"
    record(9, "property suites", check)
