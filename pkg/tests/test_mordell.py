import random

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal_lab.fields import find_primitive_nth_root, make_field
from cuspidal_lab.mordell import (ZERO_SUM, TORUS, ConventionUnavailable, DegreeMismatch, IdentityFails,
                                  NoEta, QtrError, QtrTriple, check_qtr, convert, dimension_audit,
                                  torus_family, twist_orbit, verify_qtr, xi_twist)
from cuspidal_lab.poly import Poly, graded_dim, parse, random_form

F = make_field("prime", 457)
ZETA6 = find_primitive_nth_root(F, 6).raw


def P(text, K=F):
    return parse(text, K)


def simple_triple():
    # f = h1^2 + h2^3 for a cubic h1 and a quadric h2
    h1, h2 = P("u^3 + v^2*w"), P("u*v - w^2")
    return QtrTriple(h1, h2, Poly.const(F, 1), h1 * h1 + h2 ** 3)


def test_verify_and_residual():
    t = simple_triple()
    assert verify_qtr(t).valid
    bad = QtrTriple(t.h1, t.h2 + P("u^2"), t.h3, t.f)
    with pytest.raises(IdentityFails) as e:
        verify_qtr(bad)
    assert e.value.residual
    assert not check_qtr(bad).valid


def test_degree_mismatch():
    t = QtrTriple(P("u^3"), Poly.zero(F), Poly.const(F, 1), P("u^6"))
    assert verify_qtr(t).valid
    with pytest.raises(DegreeMismatch):
        verify_qtr(QtrTriple(P("u^2"), Poly.zero(F), Poly.const(F, 1), P("u^4")))


def test_convention_round_trip():
    t = simple_triple()
    p = convert(t, ZERO_SUM)
    assert p.convention == ZERO_SUM and verify_qtr(p).valid
    back = convert(p, "torus")
    assert back.convention == TORUS and verify_qtr(back).valid
    assert back.h2 == t.h2 and back.h1 in (t.h1, -t.h1)


def test_convention_needs_sqrt_minus_one():
    K = make_field("prime", 7)
    h1, h2 = P("u^3", K), P("v^2", K)
    t = QtrTriple(h1, h2, Poly.const(K, 1), h1 * h1 + h2 ** 3)
    with pytest.raises(ConventionUnavailable):
        convert(t, ZERO_SUM)


def test_twist_has_order_six():
    t = simple_triple()
    orbit = twist_orbit(t, ZETA6)
    assert len(orbit) == 6
    assert all(verify_qtr(s).valid for s in orbit)
    t1 = xi_twist(t, ZETA6)
    assert t1.h1 == -t.h1


def test_twist_rejects_non_primitive_root():
    with pytest.raises(QtrError):
        xi_twist(simple_triple(), F.from_int(-1))


def test_no_eta():
    K = make_field("prime", 5)
    with pytest.raises(NoEta):
        torus_family(1, P("u^2", K), P("u", K), P("v", K))


def test_family_degree_checks():
    with pytest.raises(DegreeMismatch):
        torus_family(1, P("u^3"), P("u"), P("v"))


@pytest.mark.parametrize("k", [1, 2])
@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_torus_family_identities(k, s):
    rng = random.Random(s)
    f1, f2, f3 = random_form(F, 2 * k, rng), random_form(F, k, rng), random_form(F, k, rng)
    fam = torus_family(k, f1, f2, f3)
    assert fam.f == fam.v1 * fam.v1 - fam.w1 ** 3 == fam.v2 * fam.v2 - fam.w2 ** 3
    assert fam.f.degree() == 6 * k
    for t in fam.qtrs():
        assert verify_qtr(t).valid


def test_dimension_audit_identities():
    for k in range(1, 6):
        rows = dimension_audit(k, k)
        assert all(r["holds"] for r in rows), rows
    assert graded_dim(12) - graded_dim(4) - graded_dim(6) == 48
