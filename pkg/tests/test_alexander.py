import pytest

from cuspidal_lab.alexander import (RouteMismatch, WrongDegreeForm, alexander_degree, betti_candidates,
                                    cusps_on_conic, degree_from_betti, degree_from_hilbert,
                                    difference_counts, moment_equations)
from cuspidal_lab.resolution import BettiTable
from cuspidal_lab.singular import singular_locus
from cuspidal_lab.fields import make_field
from cuspidal_lab.poly import parse

F = make_field("prime", 457)


def test_candidates_for_eight_cusps_on_a_sextic():
    cands = betti_candidates(1, 8)
    assert sorted(B.key() for B in cands) == [((4, 3, 3), (5, 5)), ((4, 4, 3, 3), (5, 5, 4))]
    assert moment_equations(1, 8) == {3: -2, 4: -1, 5: 2}
    for B in cands:
        assert difference_counts(B, [3, 4, 5]) == {3: -2, 4: -1, 5: 2}


def test_candidates_small_cases():
    assert [B.key() for B in betti_candidates(1, 1)] == [((1, 1), (2,))]
    assert all(B.square_identity_value() == 64 and B.sum_equal() for B in betti_candidates(2, 32))


def test_moment_equations_undetermined():
    assert moment_equations(2, 32) is None


def test_routes():
    # six cusps of a sextic off a conic: I_2 = 0, a = (3,3,3,3), b = (4,4,4)
    B = BettiTable([3, 3, 3, 3], [4, 4, 4])
    assert degree_from_betti(B, 1) == 0
    assert degree_from_hilbert(0, 1, 6) == 0
    # on a conic the six points are a complete intersection of type (2, 3)
    assert degree_from_betti(BettiTable([3, 2], [5]), 1) == 2
    assert degree_from_hilbert(1, 1, 6) == 2


def test_wrong_degree():
    f = parse("v^2*w - u^3", F)
    with pytest.raises(WrongDegreeForm):
        alexander_degree(singular_locus(f), 3)


def test_route_mismatch_detected():
    f = parse("v^2*w - u^3", F)
    # a one-cusp locus paired with the Betti table of six points on a conic
    locus = singular_locus(f)
    with pytest.raises(RouteMismatch):
        alexander_degree(locus, 6, betti=BettiTable([3, 2], [5]))


def test_conic_helper():
    f = parse("v^2*w - u^3", F)
    assert cusps_on_conic(singular_locus(f).ideal)
