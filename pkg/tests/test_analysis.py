import csv
import io
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from innerbody.analysis import (
    check_larson_condition,
    check_sy_condition,
    class_rp_diagnostic,
    extreme_directions,
    is_homothetic,
    lambda_grid,
    larson_bound_check,
    non_increasing,
    planar_equality,
    outer_surface_check,
    reproduce_counterexample,
    sweep,
    sweep_deficit,
    sweep_quotient,
)
from innerbody.corpus import body_p, body_p_star, cube, simplex_tangent_ball, triangle_tangent_disk
from innerbody.gauge import BallGauge, PolytopeGauge
from innerbody.parallel import gauge_polytope, inner_parallel, inradius, minkowski_sum
from innerbody.polytope import Polytope
from innerbody.quermass import geq

from helpers import seeded_gauge, seeded_polytope, seeded_pythagorean

seeds = st.integers(0, 2**32)
B2, B3 = BallGauge(2), BallGauge(3)
P_DIRS = {(12, 0, 35), (-12, 0, 35), (0, 12, 5), (0, -12, 5), (0, 0, -1)}


# -- direction sets ---------------------------------------------------------------------


def test_extreme_directions():
    assert extreme_directions(body_p()) == P_DIRS
    assert extreme_directions(body_p_star()) == P_DIRS
    axes = {tuple(s if k == a else 0 for k in range(3)) for a in range(3) for s in (1, -1)}
    assert extreme_directions(cube()) == axes


def test_extreme_directions_rejects_degenerate():
    with pytest.raises(ValueError):
        extreme_directions(Polytope.from_vertices([(0, 0, 0), (1, 1, 1)]))


# -- the inclusion conditions ---------------------------------------------------------------


def test_inclusion_condition_limit_case_for_p():
    res = check_sy_condition(body_p(), B3, 0)
    assert not res.holds


def test_inclusion_condition_fails_for_p_inside():
    res = check_sy_condition(body_p(), B3, -1)
    assert not res.holds and not res.inclusion_holds


@pytest.mark.parametrize("lam", [Fraction(-1, 4), Fraction(-1, 2), Fraction(-7, 8)])
def test_inclusion_condition_tangential_simplex(lam):
    res = check_sy_condition(simplex_tangent_ball(), B3, lam)
    assert res.holds and res.inclusion_holds and res.equality


@given(seeds, st.fractions(min_value=Fraction(1, 20), max_value=Fraction(19, 20), max_denominator=20))
def test_direction_condition_implies_inclusion(seed, t):
    K = seeded_pythagorean(seed)
    res = check_sy_condition(K, B3, -t * inradius(K, B3).r)
    if res.holds:
        assert res.inclusion_holds


@given(seeds, st.fractions(min_value=Fraction(1, 20), max_value=Fraction(19, 20), max_denominator=20))
def test_planar_inclusion_always_holds(seed, t):
    K = seeded_pythagorean(seed, 2)
    res = check_sy_condition(K, B2, -t * inradius(K, B2).r)
    assert res.holds and res.inclusion_holds


def test_planar_equality_when_no_edge_vanishes():
    assert planar_equality(triangle_tangent_disk(), B2, Fraction(-1, 2))
    assert planar_equality(Polytope.box([-2, -1], [2, 1]), B2, Fraction(-1, 2))


def test_planar_equality_fails_when_an_edge_vanishes():
    # the cut corner 3x + 4y <= 6 is gone from K_{-1/2} = [-1/2, 1/2]^2
    K = Polytope(2, halfspaces=[((1, 0), 1), ((-1, 0), 1), ((0, 1), 1), ((0, -1), 1), ((3, 4), 6)])
    Kl = inner_parallel(K, B2, Fraction(-1, 2))
    assert len(Kl.halfspaces) == 4
    res = check_sy_condition(K, B2, Fraction(-1, 2))
    assert res.holds and res.inclusion_holds and not res.equality


def test_sum_direction_condition():
    assert not check_larson_condition(body_p(), B3)
    assert check_larson_condition(cube(), B3)
    assert check_larson_condition(simplex_tangent_ball(), B3)


# -- sweeps -----------------------------------------------------------------------------------------


def test_lambda_grid():
    g = lambda_grid(Fraction(10, 3), 4)
    assert g == [Fraction(-5, 2), Fraction(-5, 3), Fraction(-5, 6), 0]
    assert all(a < b for a, b in zip(g, g[1:]))
    with pytest.raises(ValueError):
        lambda_grid(Fraction(1), 0)


def test_cube_in_ball_quotient_constant():
    rep = sweep_quotient(cube(), B3, 0, 1, grid_size=16)
    assert {r.phi for r in rep.rows} == {216}
    assert rep.quotient_monotone


def test_tangential_simplex_quotient_constant():
    rep = sweep_quotient(simplex_tangent_ball(), B3, 0, 1, grid_size=16)
    phi0 = rep.rows[-1].phi
    assert all(r.phi == phi0 for r in rep.rows)


def test_cube_in_ball_deficit_closed_form():
    rep = sweep_deficit(cube(), B3, 0, 1, grid_size=16)
    for r in rep.rows:
        expected = (13824 - 2304 * math.pi) * float(1 + r.lam) ** 6
        assert float(r.psi) == pytest.approx(expected, rel=1e-12)
    assert rep.deficit_monotone


@pytest.mark.parametrize("i, j", [(0, 1), (0, 2), (1, 2)])
def test_body_equal_to_gauge_deficit_vanishes(i, j):
    rep = sweep_deficit(cube(), PolytopeGauge(cube()), i, j, grid_size=8)
    assert all(r.psi == 0 for r in rep.rows)


def test_p_deficit_non_decreasing():
    assert sweep_deficit(body_p(), B3, 0, 1, grid_size=32).deficit_monotone


def test_invalid_indices():
    with pytest.raises(ValueError):
        sweep(cube(), B3, 1, 1)
    with pytest.raises(ValueError):
        sweep(cube(), B3, 0, 3)


@given(seeds)
def test_deficit_i0_unconditional(seed):
    K, E = seeded_polytope(seed), seeded_gauge(seed)
    for j in (1, 2):
        assert sweep_deficit(K, E, 0, j, grid_size=12).deficit_monotone
    assert sweep_deficit(seeded_pythagorean(seed), B3, 0, 1, grid_size=12).deficit_monotone


@given(seeds)
def test_positive_lambda_extension_quotient(seed):
    K, E = seeded_polytope(seed), seeded_gauge(seed)
    rep = sweep_quotient(K, E, 0, 1, grid_size=2, extend_to=3, extend_steps=8)
    outer = [r.phi for r in rep.rows if r.lam >= 0]
    assert len(outer) == 9 and non_increasing(outer, 0)


def _conditional_checks(K, E, grid_size=6):
    """Quotient and deficit verdicts wherever the R_p diagnostic passes."""
    checked = 0
    for p in (1, 2):
        if not class_rp_diagnostic(K, E, p, grid_size=4).member_plausible:
            continue
        checked += 1
        for i in range(p):
            rep = sweep(K, E, i, p, grid_size=grid_size)
            assert rep.quotient_monotone
            assert all(geq(r.phi, rep.rows[-1].phi) for r in rep.rows)
        for j in range(p + 1, 3):
            assert sweep(K, E, p, j, grid_size=grid_size).deficit_monotone
    return checked


@settings(max_examples=8)
@given(seeds, seeds)
def test_conditional_sweeps_on_segment_plus_gauge(a, b):
    # K = segment + 2E satisfies the derivative identity for every p
    E = seeded_gauge(a)
    seg = Polytope.from_vertices([(0, 0, 0), seeded_polytope(b).vertices[0]])
    K = minkowski_sum(seg, gauge_polytope(E, 2))
    assert _conditional_checks(K, E) == 2


@settings(max_examples=8)
@given(seeds)
def test_conditional_sweeps_random(seed):
    _conditional_checks(seeded_polytope(seed), seeded_gauge(seed))


def test_condition_everywhere_gives_monotone_quotient():
    for K in (cube(), simplex_tangent_ball()):
        rep = sweep(K, B3, 0, 1, grid_size=8, with_conditions=True)
        assert all(r.sy_holds for r in rep.rows)
        assert rep.quotient_monotone


def test_csv_layout():
    rep = sweep(cube(), B3, 0, 1, grid_size=2, with_conditions=True)
    rows = list(csv.reader(io.StringIO(rep.to_csv())))
    assert rows[0] == ["lambda", "W_0", "W_1", "W_2", "W_3", "phi", "psi", "sy_holds", "inclusion_holds"]
    assert rows[1][0] == "-1/2" and rows[1][1] == "1" and rows[1][5] == "216"
    assert float(rows[1][3]) == pytest.approx(math.pi, rel=1e-16)
    assert rows[2][7] == "true"
    assert len(rows[1][3].replace(".", "").lstrip("0")) >= 16


# -- class R_p ------------------------------------------------------------------------------


@settings(max_examples=15)
@given(seeds)
def test_rp_zero_always(seed):
    assert class_rp_diagnostic(seeded_polytope(seed), seeded_gauge(seed), 0, grid_size=4).member_plausible


def test_rp_body_equal_to_gauge():
    res = class_rp_diagnostic(cube(), PolytopeGauge(cube()), 2)
    assert res.member_plausible and res.worst_gap == 0


def test_rp_cube_in_ball_fails_at_p1():
    res = class_rp_diagnostic(cube(), B3, 1)
    assert not res.member_plausible
    assert res.worst_gap == pytest.approx(16 - 4 * math.pi, abs=1e-6)
    assert res.worst_at == (0, 1)
    assert res.ordering_ok


def test_rp_rejects_bad_p():
    with pytest.raises(ValueError):
        class_rp_diagnostic(cube(), B3, 3)


# -- perimeter bound and the outer surface comparison ------------------------------------------------------


def test_perimeter_bound_cube_equality():
    rep = larson_bound_check(cube(), grid_size=8)
    assert rep.all_contained and rep.all_equal and rep.all_bounds


def test_perimeter_bound_tangential_simplex():
    rep = larson_bound_check(simplex_tangent_ball(), grid_size=8)
    assert rep.all_equal


def test_perimeter_bound_p_strict_containment():
    rep = larson_bound_check(body_p(), grid_size=8)
    assert rep.inradius == Fraction(10, 3)
    assert rep.center == (-16, 0, Fraction(10, 3))
    assert rep.all_contained and rep.all_bounds
    assert not any(r.equal for r in rep.rows[:-1])


@given(seeds)
def test_perimeter_bound_random(seed):
    rep = larson_bound_check(seeded_pythagorean(seed), B3, grid_size=6)
    assert rep.all_contained and rep.all_bounds


@given(seeds, st.fractions(min_value=Fraction(1, 10), max_value=Fraction(9, 10), max_denominator=10))
def test_outer_surface_comparison(seed, t):
    K = seeded_pythagorean(seed)
    res = outer_surface_check(K, B3, -t * inradius(K, B3).r)
    assert res.surface_ok and res.outer_erodes_back


# -- homothety --------------------------------------------------------------------------------------


def test_homothety_scaled_translated():
    K = body_p()
    h = is_homothetic(K, K.scale(Fraction(2, 3)).translate((1, -2, Fraction(1, 5))))
    assert h is not None and h.scale == Fraction(2, 3) and h.translation == (1, -2, Fraction(1, 5))


def test_homothety_negative():
    assert is_homothetic(cube(), Polytope.box([0, 0, 0], [2, 1, 1])) is None
    assert is_homothetic(body_p(), inner_parallel(body_p(), B3, -1)) is None


@given(seeds, st.fractions(min_value=Fraction(1, 10), max_value=5, max_denominator=10))
def test_homothety_random(seed, s):
    K = seeded_polytope(seed)
    h = is_homothetic(K, K.scale(s))
    assert h is not None and h.scale == s and h.translation == (0, 0, 0)


# -- scripted reproduction ------------------------------------------------------------------------


def test_reproduce_counterexample():
    certs = reproduce_counterexample()
    assert len(certs) == 3 and all(c.passed for c in certs)
    assert "gap = 12/35" in certs[2].detail
