import random

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal_lab.fields import make_field
from cuspidal_lab.poly import apply3, inverse3, parse, random_linear_change
from cuspidal_lab.singular import (NonCuspSingularity, NonReducedCurve, PointNotOnCurve, ProjPoint,
                                   SmoothPoint, assert_only_cusps, brute_force_singular_points,
                                   classify_singularity, evaluation_rank, is_reduced,
                                   rational_points_of, singular_locus, solve_points)

F = make_field("prime", 457)
F7 = make_field("prime", 7)


def P(text, K=F):
    return parse(text, K)


def pt(*c, K=F):
    return ProjPoint.normalized(K, c)


def test_cuspidal_cubic():
    f = P("v^2*w - u^3")
    r = classify_singularity(f, pt(0, 0, 1))
    assert (r.type, r.local_tjurina) == ("A2", 2)
    locus = assert_only_cusps(f)
    assert locus.count == 1 and locus.tjurina_total == 2


def test_triangle_has_three_nodes():
    f = P("u*v*w")
    locus = singular_locus(f)
    assert (locus.count, locus.tjurina_total) == (3, 3)
    for c in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        assert classify_singularity(f, pt(*c)).type == "A1"
    with pytest.raises(NonCuspSingularity) as e:
        assert_only_cusps(f)
    assert e.value.report.type == "A1"


def test_tacnode_is_other_with_tjurina_three():
    f = P("v^2*w^2 - u^4")
    r = classify_singularity(f, pt(0, 0, 1))
    assert r.type == "other" and r.local_tjurina == 3


def test_fermat_cubic_mod_7_is_smooth():
    f = P("u^3 + v^3 + w^3", F7)
    locus = singular_locus(f)
    assert locus.count == 0 and locus.tjurina_total == 0
    assert brute_force_singular_points(f) == []


def test_smooth_and_off_curve_points():
    f = P("v^2*w - u^3")
    with pytest.raises(SmoothPoint):
        classify_singularity(f, pt(1, 1, 1))
    with pytest.raises(PointNotOnCurve):
        classify_singularity(f, pt(1, 2, 1))


def test_non_reduced_curve():
    f = P("u^2*v")
    assert not is_reduced(f)
    with pytest.raises(NonReducedCurve):
        singular_locus(f)


def test_points_over_an_extension():
    # v^2 = (u^2 + w^2)^2 is singular at [i:0:1] and [-i:0:1], conjugate over F_7
    f = P("v^2*w^2 - u^4 - 2*u^2*w^2 - w^4", F7)
    locus = singular_locus(f)
    pts, total, skipped = solve_points(locus.ideal)
    assert total == locus.count and skipped == 0
    assert {p.ext_degree for p in pts} >= {2}
    conj = [p for p in pts if p.ext_degree == 2][0]
    assert conj.conjugate() != conj


def test_brute_force_matches_solver_on_rational_points():
    f = P("u*v*w + u^3 + v^3")
    locus = singular_locus(f)
    pts, _, _ = solve_points(locus.ideal)
    assert brute_force_singular_points(f) == rational_points_of(pts)


def test_evaluation_rank():
    pts = [pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1)]
    assert evaluation_rank(pts, 0) == 1
    assert evaluation_rank(pts, 1) == 3
    assert evaluation_rank([pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0)], 1) == 2


CURVES = {"cusp": ("v^2*w - u^3", (0, 0, 1), "A2"),
          "node": ("v^2*w - u^3 - u^2*w", (0, 0, 1), "A1"),
          "tacnode": ("v^2*w^2 - u^4", (0, 0, 1), "other")}


@pytest.mark.parametrize("name", sorted(CURVES))
@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_classification_is_invariant_under_coordinate_change(name, s):
    text, c, expected = CURVES[name]
    f = P(text)
    M = random_linear_change(F, random.Random(s))
    g = f.linear_change(M)
    # g(x) = f(M x), so the singular point moves to M^-1 c
    q = apply3(inverse3(M, F), c, F)
    r0 = classify_singularity(f, pt(*c))
    r1 = classify_singularity(g, pt(*q))
    assert r1.type == r0.type == expected
    assert r1.local_tjurina == r0.local_tjurina
