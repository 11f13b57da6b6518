import cmath
import math

import numpy as np
import pytest

from l2zeta.algebra import Poly, RationalFn, TPoly, deflate_repeated_factors
from l2zeta.fixtures import NAMES, load_fixture
from l2zeta.graph import Edge, VoltageGraph
from l2zeta.surface import (INF, ClearedOmega, DeflationRequired, SymbolicLimitExceeded,
                            analyze_surface, branch_candidates, build_omega, cycle_type,
                            functional_eq_check, galois_check, in_c_set, monodromy_at,
                            omega_interpolated, omega_sigma_form, omega_symbolic,
                            quotient_pole_compare, sheet_values)
from l2zeta.zeta import pu_data

S3 = 1 / math.sqrt(3)


def rf(num, den):
    return RationalFn(Poly(num), Poly(den))


def close_to(z, targets, tol=1e-8):
    return any(t != INF and z != INF and abs(complex(z) - t) < tol for t in targets)


def test_sigma_form_small_n():
    # n = 1: T^2 - 2 s1 T + 1
    assert omega_sigma_form(1) == [{(0,): 1}, {(1,): -2}, {(0,): 1}]
    f = omega_sigma_form(2)
    assert f[4] == {(0, 0): 1} and f[0] == {(0, 0): 1}
    assert f[3] == {(0, 1): -4}
    # palindromic in T
    assert f[1] == f[3]


def test_sawtooth_quartic_exact():
    om = omega_symbolic(pu_data(load_fixture("sawtooth")))
    outer = rf((-1, 0, -4, 0, -9), (0, 0, 1))
    mid = rf((2, 4, 15, 12, 18), (0, 0, 1))
    one = RationalFn.from_int(1)
    assert list(om.coeffs) == [one, outer, mid, outer, one]


def test_line_numeric_roots():
    pu = pu_data(load_fixture("line"))
    W = sorted(sheet_values(pu, 0.5).W, key=abs)
    assert np.allclose(W, [0.5, 2.0])


@pytest.mark.parametrize("name", ["graph1", "sawtooth", "triladder"])
def test_root_product_and_interpolation(name):
    pu = pu_data(load_fixture(name))
    W = np.array(sheet_values(pu, 0.03 + 0.04j).W)
    assert abs(np.prod(W) - 1) < 1e-10
    assert omega_interpolated(pu) == omega_symbolic(pu)


def test_symbolic_limit():
    vs = tuple("abcde")
    edges = tuple(Edge(i, i, 1) for i in range(5)) + tuple(Edge(i, i + 1, 0) for i in range(4))
    G = VoltageGraph(vs, edges)
    pu = pu_data(G)
    with pytest.raises(SymbolicLimitExceeded):
        omega_symbolic(pu)
    assert build_omega(pu).symbolic is None


def test_candidates_graph1_and_sawtooth():
    om = omega_symbolic(pu_data(load_fixture("graph1")))
    c = branch_candidates(om)
    assert c[0] == 0 and c[-1] == INF
    finite = c[1:-1]
    expected = [1, 1 / 3, 1j * S3, -1j * S3]
    assert len(finite) == 4 and all(close_to(z, expected) for z in finite)
    saw = branch_candidates(omega_symbolic(pu_data(load_fixture("sawtooth"))))
    assert len(saw) == 12


def test_deflation_required_on_triladder():
    om = omega_symbolic(pu_data(load_fixture("triladder")))
    with pytest.raises(DeflationRequired):
        branch_candidates(om)
    sq, rep = deflate_repeated_factors(om)
    assert [k for _, k in rep] == [2] and rep[0][0].degree == 2


def test_identity_monodromy_away_from_candidates():
    om = omega_symbolic(pu_data(load_fixture("graph1")))
    C = ClearedOmega.from_tpoly(om)
    cands = branch_candidates(om)
    # a point that is not a candidate: its loop encloses nothing
    p = monodromy_at(C, 0.5 + 0.5j, cands + [0.5 + 0.5j], 0.05)
    assert p == (0, 1)
    assert cycle_type((1, 0, 2, 3)) == (2, 1, 1)
    assert cycle_type((1, 0, 3, 2), {0, 1}) == (2,)


def test_galois_check():
    assert galois_check([(1, 0)], {0, 1})
    assert galois_check([(1, 2, 0)], {0, 1, 2})
    assert not galois_check([(1, 0, 2), (0, 2, 1)], {0, 1, 2})


def test_c_set():
    assert in_c_set(1 / math.sqrt(3), 3)
    assert in_c_set(0.5, 3) and in_c_set(-1, 3)
    assert not in_c_set(0.2, 3) and not in_c_set(0, 3) and not in_c_set(INF, 3)
    # q = 1: the circle is |u| = 1 and the segments shrink to +-1
    assert in_c_set(1j, 1) and not in_c_set(0.5, 1)


def test_line_surface():
    rep, _ = analyze_surface(load_fixture("line"))
    assert (rep.d, rep.b, rep.genus) == (1, 0, 0)
    assert any("not stable" in n for n in rep.notes)


def test_graph1_surface():
    rep, _ = analyze_surface(load_fixture("graph1"))
    assert (rep.d, rep.b, rep.genus, rep.galois) == (2, 4, 1, True)
    assert all(rep.c_membership)
    assert all(bp.cycle_structure == (2,) for bp in rep.branch_points)


@pytest.mark.parametrize("name, d, genus", [
    ("graph2", 2, 3), ("graph3", 2, 3), ("graph4", 2, 1), ("graph5", 2, 1), ("graph6", 2, 3),
    ("sawtooth", 4, 3),
])
def test_genus_table(name, d, genus):
    rep, _ = analyze_surface(load_fixture(name))
    assert rep.d == d and rep.genus == genus
    assert rep.b % 2 == 0
    assert rep.b == sum(bp.branching_order for bp in rep.branch_points)


def test_quotient_poles_graph3():
    G = load_fixture("graph3")
    rep, data = analyze_surface(G)
    poles = quotient_pole_compare(G, rep, data)
    target = [complex(-0.25, math.sqrt(7) / 4), complex(-0.25, -math.sqrt(7) / 4)]
    hits = [p for p in poles if close_to(p.u, target)]
    assert len(hits) == 2
    assert all(p.candidate and not p.branched for p in hits)


def test_quotient_poles_graph1_are_branched():
    G = load_fixture("graph1")
    rep, data = analyze_surface(G)
    poles = quotient_pole_compare(G, rep, data)
    # P(1) = (1-u)(1-3u): both zeros are branch points
    assert len(poles) == 2 and all(p.branched for p in poles)


def test_functional_equation_regular_only():
    assert functional_eq_check(load_fixture("graph4"), [0.07, 0.02 + 0.05j]) < 1e-8
    with pytest.raises(ValueError):
        functional_eq_check(load_fixture("graph6"), [0.07])


def test_triladder_derived_surface():
    # monodromy permutes sheets only where r1 = +-1 or r3 = +-1
    rep, _ = analyze_surface(load_fixture("triladder"))
    expected = [1, 1 / 3, 1j * S3, -1j * S3, complex(-0.5, math.sqrt(3) / 6),
                complex(-0.5, -math.sqrt(3) / 6), complex(1, math.sqrt(11)) / 6,
                complex(1, -math.sqrt(11)) / 6]
    locs = [bp.location for bp in rep.branch_points]
    assert len(locs) == 8 and all(close_to(z, expected) for z in locs)
    assert all(bp.cycle_structure == (2, 2) for bp in rep.branch_points)
    assert (rep.d, rep.b, rep.genus, rep.galois) == (4, 16, 5, True)
    assert not rep.omega_irreducible and all(rep.c_membership)
    assert any(n.startswith("Phi-component is stable") for n in rep.notes)
