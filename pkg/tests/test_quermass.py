import math
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from innerbody.corpus import cube
from innerbody.gauge import BallGauge, PolytopeGauge
from innerbody.polytope import Polytope, volume
from innerbody.quermass import (
    af_pairs,
    QuermassVector,
    deficit,
    geq,
    inequality_suite,
    mixed_quermass,
    quermass,
    quermass_ball,
    quermass_poly_gauge,
    quotient,
    steiner_eval,
)

from helpers import seeded_gauge, seeded_polytope, seeded_pythagorean
from oracles import poly_mul

seeds = st.integers(0, 2**32)
unit_cube = Polytope.box([0] * 3, [1] * 3)
unit_square = Polytope.box([0, 0], [1, 1])
box_2x1 = Polytope.box([0, 0], [2, 1])


def test_unit_cube_with_itself():
    assert quermass_poly_gauge(unit_cube, unit_cube).values == (1, 1, 1, 1)


def test_box_with_unit_square_matches_expansion():
    # vol = (2 + mu)(1 + mu); W_i = coefficient_i / binom(2, i)
    coeffs = poly_mul([2, 1], [1, 1])
    expected = tuple(c / comb(2, i) for i, c in enumerate(coeffs))
    assert expected == (2, Fraction(3, 2), 1)
    assert quermass_poly_gauge(box_2x1, unit_square).values == expected
    assert mixed_quermass(box_2x1, unit_square).values == expected


@given(seeds)
def test_body_equal_to_gauge(seed):
    E = seeded_gauge(seed).body
    W = quermass_poly_gauge(E, E)
    assert all(w == volume(E) for w in W)


def test_steiner_eval_values():
    assert steiner_eval(unit_cube, unit_cube, 2) == 27
    assert steiner_eval(box_2x1, unit_square, 1) == 6
    assert steiner_eval(box_2x1, unit_square, 0) == 2
    with pytest.raises(ValueError):
        steiner_eval(box_2x1, unit_square, -1)


@given(seeds, st.fractions(min_value=0, max_value=10, max_denominator=20))
def test_interpolation_self_consistency(seed, mu):
    K, E = seeded_polytope(seed), seeded_gauge(seed)
    W = quermass_poly_gauge(K, E)
    poly = sum(c * mu**i for i, c in enumerate(W.steiner_coefficients()))
    assert poly == steiner_eval(K, E, mu)


@given(seeds)
def test_mixed_formula_agrees_with_interpolation(seed):
    K, E = seeded_polytope(seed), seeded_gauge(seed)
    assert mixed_quermass(K, E) == quermass_poly_gauge(K, E)
    K2, E2 = seeded_polytope(seed, 2), seeded_gauge(seed, 2)
    assert mixed_quermass(K2, E2) == quermass_poly_gauge(K2, E2)


def test_ball_cube_side_two():
    W = quermass_ball(cube())
    expected = (8, 8, 2 * math.pi, 4 * math.pi / 3)
    assert W.exact == (True, True, False, False)
    for w, e in zip(W, expected):
        assert float(w) == pytest.approx(e, rel=1e-12)


def test_ball_unit_square():
    W = quermass_ball(unit_square)
    assert W[0] == 1 and W[1] == 2 and W[2] == pytest.approx(math.pi, rel=1e-15)


def test_ball_rejects_degenerate():
    with pytest.raises(ValueError):
        quermass_ball(Polytope.from_vertices([(0, 0, 0), (1, 0, 0)]))


@given(seeds, st.fractions(min_value=Fraction(-9, 10), max_value=2, max_denominator=30))
def test_homogeneity(seed, lam):
    K, E = seeded_polytope(seed), seeded_gauge(seed)
    s = 1 + lam
    W, Ws = quermass(K, E), quermass(K.scale(s), E)
    assert all(Ws[i] == s ** (3 - i) * W[i] for i in range(4))
    Wb, Wbs = quermass_ball(K), quermass_ball(K.scale(s))
    for i in range(4):
        assert float(Wbs[i]) == pytest.approx(float(s) ** (3 - i) * float(Wb[i]), rel=1e-12)


@given(seeds)
def test_inequality_suite_exact_polytopal(seed):
    K, E = seeded_polytope(seed), seeded_gauge(seed)
    W = quermass(K, E)
    assert all(w > 0 for w in W)
    assert inequality_suite(W, E.volume) == {"af": [], "af_literal": [], "af2": [], "general": [], "b": []}


@given(seeds)
def test_inequality_suite_ball(seed):
    W = quermass_ball(seeded_pythagorean(seed))
    res = inequality_suite(W, 4 * math.pi / 3)
    assert res["af"] == res["af2"] == res["general"] == res["b"] == []


@given(seeds, st.fractions(min_value=Fraction(1, 1000), max_value=1000, max_denominator=1000))
def test_homogeneous_suites_hold_at_every_scale(seed, s):
    K, E = seeded_polytope(seed).scale(s), seeded_gauge(seed)
    res = inequality_suite(quermass(K, E), E.volume)
    assert res["af"] == res["af2"] == res["general"] == res["b"] == []


def test_unrestricted_af_family_is_scale_dependent():
    E = PolytopeGauge(cube())
    assert inequality_suite(quermass(cube(), E), E.volume)["af_literal"] == []
    small = inequality_suite(quermass(cube().scale(Fraction(1, 10)), E), E.volume)
    assert (0, 1, 1, 3) in small["af_literal"] and small["af"] == []


def test_af_pairs_homogeneous_subset():
    assert set(af_pairs(3)) == {(0, 1, 1, 2), (0, 1, 2, 3), (1, 2, 2, 3)}
    assert set(af_pairs(3)) < set(af_pairs(3, homogeneous=False))


def test_inequality_suite_detects_violation():
    W = QuermassVector((Fraction(1), Fraction(1, 10), Fraction(1), Fraction(1)))
    res = inequality_suite(W, 1)
    assert res["af"] and res["af2"]


def test_quotient_and_deficit_cube_in_ball():
    W = quermass_ball(cube())
    assert quotient(W, 0, 1) == 216
    assert float(deficit(W, 0, 1, 4 * math.pi / 3)) == pytest.approx(13824 - 2304 * math.pi, rel=1e-12)


def test_geq_regimes():
    assert geq(Fraction(1, 3), Fraction(1, 3))
    assert not geq(Fraction(1, 3), Fraction(1, 3) + Fraction(1, 10**30))
    assert geq(1.0, 1.0 + 1e-12)
    assert not geq(1.0, 1.0 + 1e-6)


def test_dispatch():
    assert quermass(box_2x1, PolytopeGauge.centered(unit_square), method="interpolation").values == (2, Fraction(3, 2), 1)
    assert quermass(unit_square, BallGauge(2))[1] == 2
    with pytest.raises(ValueError):
        quermass(box_2x1, PolytopeGauge.centered(unit_square), method="nope")
