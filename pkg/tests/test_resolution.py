import pytest
from hypothesis import given, settings, strategies as st

from cuspidal_lab.fields import make_field
from cuspidal_lab.groebner import IdealBasis
from cuspidal_lab.linalg import nullspace
from cuspidal_lab.poly import Poly, monomials, parse
from cuspidal_lab.resolution import (BettiTable, UnexpectedProjectiveDimension, betti_table,
                                     hilbert_function, minimal_generators, scheme_length,
                                     stabilization_degree)

F = make_field("prime", 457)
F101 = make_field("prime", 101)


def ideal(*texts, K=F):
    return IdealBasis([parse(t, K) for t in texts], "grevlex", K)


def ideal_of_points(K, pts):
    """Forms of degree <= #pts vanishing on pts; the regularity bound makes them generate."""
    gens = []
    for d in range(1, len(pts) + 1):
        mons = monomials(d)
        rows = [[K.pow(P[0], m[0]) * K.pow(P[1], m[1]) * K.pow(P[2], m[2]) % K.characteristic
                 for m in mons] for P in pts]
        for v in nullspace(rows, K, len(mons)):
            gens.append(Poly(K, {m: c for m, c in zip(mons, v) if c}))
    return IdealBasis(gens, "grevlex", K)


def test_three_general_points_square():
    I = ideal("u^2", "u*v", "v^2")
    assert [d for d, _ in minimal_generators(I)] == [2, 2, 2]
    B = betti_table(I)
    assert B.gen_degrees == [2, 2, 2] and B.syz_degrees == [3, 3]
    assert B.sum_equal() and B.square_identity_value() == 6
    assert scheme_length(I) == 3


def test_complete_intersection():
    I = ideal("u^2 - v*w", "v^3 - w^3")
    B = betti_table(I)
    assert B.key() == ((3, 2), (5,))
    assert scheme_length(I) == 6
    assert all(B.quotient_dim(d) == I.quotient_dim(d) for d in range(10))


def test_principal_ideal_is_rejected():
    with pytest.raises(UnexpectedProjectiveDimension):
        betti_table(ideal("u^2 + v*w"))


def test_hilbert_function_counts_forms():
    I = ideal("u", "v")
    assert [hilbert_function(I, d) for d in range(4)] == [0, 2, 5, 9]
    assert stabilization_degree(I) == 0


def test_betti_table_order_and_equality():
    B = BettiTable([7, 8, 7], [9, 9])
    assert B.gen_degrees == [8, 7, 7]
    assert B == BettiTable([8, 7, 7], [9, 9])
    assert str(B) == "a=(8, 7, 7) b=(9, 9)"


def point():
    return st.tuples(st.integers(0, 100), st.integers(0, 100)).map(lambda t: (t[0], t[1], 1))


@settings(max_examples=20, deadline=None)
@given(st.lists(point(), min_size=2, max_size=6, unique=True))
def test_betti_identities_for_points(pts):
    I = ideal_of_points(F101, pts)
    assert scheme_length(I) == len(pts)
    B = betti_table(I)
    assert B.sum_equal()
    assert B.square_identity_value() == 2 * len(pts)
    assert B.positionwise_ok()
    top = max(B.syz_degrees) + 2
    assert all(B.quotient_dim(d) == I.quotient_dim(d) for d in range(top))

