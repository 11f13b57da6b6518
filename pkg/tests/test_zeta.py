import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from l2zeta.algebra import Poly, RationalFn
from l2zeta.fixtures import NAMES, load_fixture
from l2zeta.graph import parse_graph
from l2zeta.zeta import (DegenerateLeadingCoefficient, IntegrandSingularity, arccosh_integral_check,
                         arccosh_rhs, closed_form_taylor, det_numeric, psqrt, pu_data, roots_at,
                         theta_integral_det, zeta, zeta_closed_form)


def rf(num, den):
    return RationalFn(Poly(num), Poly(den))


def test_psqrt_negative_zero():
    assert psqrt(complex(-4.0, -0.0)) == 2j
    assert psqrt(-4) == 2j


def test_pu_line_and_graph1():
    line = pu_data(load_fixture("line"))
    assert line.n == 1 and line.alpha == Poly((0, 2))
    assert line.r_function() == rf((1, 0, 1), (0, 2))
    g1 = pu_data(load_fixture("graph1"))
    # P(x) = -2ux + 1 - 2u + 3u^2
    assert g1.P.coeffs == (Poly((1, -2, 3)), Poly((0, -2)))
    assert g1.r_function() == rf((1, -2, 3), (0, 2))


def test_pu_sawtooth_sigmas():
    pu = pu_data(load_fixture("sawtooth"))
    assert pu.n == 2 and pu.alpha == Poly((0, 0, 4))
    s1, s2 = pu.sigmas()
    assert s1 == rf((2, 1, 6), (0, 2))
    assert s2 == rf((1, 0, 4, 0, 9), (0, 0, 4))
    with pytest.raises(ValueError):
        pu.r_function()


def test_pu_matches_numeric_determinant():
    G = load_fixture("triladder")
    pu = pu_data(G)
    for u, t in [(0.2 + 0.1j, 0.6 - 0.3j), (-0.4, 2.0)]:
        x = (t + 1 / t) / 2
        assert pu.P(u, x) == pytest.approx(det_numeric(G, u, t), rel=1e-12)


def test_roots_repeated_factor_accuracy():
    pu = pu_data(load_fixture("triladder"))
    rs = sorted(roots_at(pu, 0.07 + 0.03j).roots, key=lambda z: (z.real, z.imag))
    u = 0.07 + 0.03j
    double = (1 + u + 3 * u * u) / (2 * u)
    assert sum(abs(r - double) < 1e-12 for r in rs) == 2


def test_degenerate_alpha():
    with pytest.raises(DegenerateLeadingCoefficient):
        roots_at(pu_data(load_fixture("sawtooth")), 1e-20)


def test_line_is_one():
    G = load_fixture("line")
    for u in (0.3, -0.5, 0.2 + 0.6j, 0.8j):
        assert abs(zeta(G, u) - 1) < 1e-12


def test_u_zero_limit():
    z = zeta_closed_form(load_fixture("graph1"), 0)
    assert z.value == 1 and z.limit_value


# values from the circle-average determinant oracle, frozen
@pytest.mark.parametrize("name, u, expected", [
    ("graph1", 0.05, 1.10806402932234 + 0j),
    ("sawtooth", 0.05 + 0.02j, 1.000260564963661 + 0.0006038245239808641j),
    ("triladder", -0.03 + 0.06j, 1.0005492292200702 - 2.6675574194779683e-06j),
])
def test_closed_form_against_frozen_oracle(name, u, expected):
    assert abs(zeta(load_fixture(name), u) - expected) < 1e-12


def test_validity_flag_outside():
    # near u = 1/3 the root of graph #1 crosses [-1, 1]
    z = zeta_closed_form(load_fixture("graph1"), 0.6)
    assert not z.in_validity_region and z.notes


def test_theta_convergence_and_singularity():
    G = load_fixture("graph1")
    th = theta_integral_det(G, 0.05)
    assert th.converged and th.samples >= 128
    with pytest.raises(ValueError):
        theta_integral_det(G, 0.05, samples=32)
    # u = 1/3: det M vanishes at theta = 0
    with pytest.raises(IntegrandSingularity):
        theta_integral_det(G, 1 / 3)


@pytest.mark.parametrize("r", [0.0, 1.0, -1.0, 0.3, -0.77, 2.5, -3.0, 1 + 1j, -0.2 - 0.5j])
def test_arccosh_identity(r):
    lhs, rhs = arccosh_integral_check(r)
    assert abs(lhs - rhs) < 1e-9


def test_arccosh_rhs_values():
    assert arccosh_rhs(1) == pytest.approx(-math.log(2))
    assert arccosh_rhs(3).real == pytest.approx(math.acosh(3) - math.log(2))


@settings(max_examples=25, deadline=None)
@given(st.floats(-3, 3), st.floats(-3, 3))
def test_arccosh_off_segment(x, y):
    r = complex(x, y)
    if abs(y) < 0.05 and abs(x) < 1.05:
        return
    lhs, rhs = arccosh_integral_check(r)
    assert abs(lhs - rhs) < 1e-8


def test_taylor_line_is_trivial():
    c = closed_form_taylor(load_fixture("line"), 6)
    assert np.allclose(c, [1, 0, 0, 0, 0, 0, 0], atol=1e-8)
