import random

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal_lab.fields import make_field
from cuspidal_lab.poly import (DependentLines, NotHomogeneous, Poly, PolySyntaxError, euler_holds,
                               graded_dim, kummer_map_images, kummer_order2_pullback, monomials,
                               parse, parse_many, random_form)

F = make_field("prime", 457)


def test_graded_dim():
    assert [graded_dim(d) for d in range(6)] == [1, 3, 6, 10, 15, 21]
    assert len(monomials(12)) == graded_dim(12) == 91


def test_parse_and_format():
    f = parse("v^2*w - u^3", F)
    assert f.degree() == 3 and f.is_homogeneous()
    assert parse(f.format(), F) == f
    assert parse("2u^2 + 3 u v - u^2", F) == parse("u^2+3*u*v", F)


def test_extension_coefficients():
    K = make_field("extension", 7, "t^2+1")
    f = parse("[t+2]*u^2 - [t]*v*w", K)
    assert len(f) == 2
    assert parse(f.format(), K) == f


def test_parse_many_skips_comments():
    text = "# a comment\nu^2\n\nu*v  # trailing\nv^2\n"
    assert len(parse_many(text, F)) == 3


def test_parse_errors():
    with pytest.raises(PolySyntaxError):
        parse("u^^2", F)
    with pytest.raises(PolySyntaxError):
        parse("x + 1", F)


def test_diff_and_evaluate():
    f = parse("u^3 + u*v*w", F)
    assert f.diff(0) == parse("3*u^2 + v*w", F)
    assert f.evaluate_raw((1, 2, 3)) == 7


def test_substitute_linear():
    f = parse("u*v", F)
    g = f.substitute([parse("u+w", F), parse("u-w", F), parse("w", F)])
    assert g == parse("u^2 - w^2", F)


def forms(d):
    return st.integers(0, 10 ** 9).map(lambda s: random_form(F, d, random.Random(s)))


@settings(max_examples=40, deadline=None)
@given(forms(2), forms(3), forms(1))
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c.homogeneous_part(1) * c) == a * b + a * c * c
    assert a - a == Poly.zero(F)
    assert (a * b).degree() == 5


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10 ** 9))
def test_euler_relation(d, s):
    assert euler_holds(random_form(F, d, random.Random(s)))


def test_kummer_pullback_sends_lines_to_squares():
    lines = [parse("u+v", F), parse("u-v", F), parse("w+u", F)]
    q = kummer_map_images(lines)
    for i, l in enumerate(lines):
        assert l.substitute(q) == Poly.var(F, i) ** 2
    f = parse("u^3+v^3+w^3", F)
    assert kummer_order2_pullback(f, lines) == f.substitute(q)


def test_kummer_needs_independent_lines():
    with pytest.raises(DependentLines):
        kummer_map_images([parse("u", F), parse("v", F), parse("u+v", F)])
    with pytest.raises(NotHomogeneous):
        kummer_order2_pullback(parse("u^2+v", F), [parse("u", F), parse("v", F), parse("w", F)])
