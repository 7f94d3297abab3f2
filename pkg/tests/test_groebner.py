import random

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal_lab.fields import QQ, make_field
from cuspidal_lab.groebner import (FieldMismatch, IdealBasis, NotZeroDimensional, QuotientAlgebra,
                                   ResourceExhausted, affine_gb, colon, eliminate, is_groebner,
                                   radical_zero_dim, saturate)
from cuspidal_lab.poly import Poly, parse, random_form

F = make_field("prime", 457)
F101 = make_field("prime", 101)


def P(text, K=F):
    return parse(text, K)


def ideal(*texts, K=F, order="grevlex"):
    return IdealBasis([P(t, K) for t in texts], order, K)


def test_monomial_ideal_is_its_own_basis():
    I = ideal("u^2", "u*v", "v^2")
    assert sorted(g.format() for g in I.gb()) == ["u*v", "u^2", "v^2"]
    assert I.krull_dim() == 1
    assert [I.quotient_dim(d) for d in range(4)] == [1, 3, 3, 3]


def test_twisted_cubic_lex():
    # parametrized conic: elimination recovers the implicit equation
    I = ideal("u - w", "v*w - u^2", order="lex")
    G = I.gb()
    assert is_groebner(G, "lex")
    assert I.contains(P("v*w - w^2"))


def test_rational_coefficients():
    I = ideal("u^2 + 1/2*v*w", "v^2 - 3*u*w", K=QQ)
    assert is_groebner(I.gb())
    assert all(g.leading_coeff() == 1 for g in I.gb())


def test_unit_ideal():
    assert ideal("u - 1", "u").is_unit()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        IdealBasis([P("u"), P("v", F101)])


def test_resource_guard():
    gens = [random_form(F101, 4, random.Random(s)) for s in range(3)]
    with pytest.raises(ResourceExhausted):
        IdealBasis(gens).gb(max_steps=3)


def test_eliminate():
    I = ideal("u - v^2", "w - v^3", order="grevlex")
    E = eliminate(I, 1)
    assert E.generators
    assert all(all(e[1] == 0 for e in g.terms) for g in E.gb())
    assert E.contains(P("u^3 - w^2"))


def test_colon_and_saturation_of_embedded_point():
    # (u^2, u v) = (u) cap (u^2, v): colon by v strips the embedded component
    I = ideal("u^2", "u*v")
    assert colon(I, P("v")).same_ideal(ideal("u"))
    assert saturate(I, P("v")).same_ideal(ideal("u"))


def test_saturation_by_irrelevant_variable():
    I = ideal("u*w", "v*w", "w^2")
    S = saturate(I, P("w"))
    assert S.is_unit()


def test_saturation_by_linear_form():
    l = P("u+v")
    assert saturate(IdealBasis([l * P("u"), l * P("w")]), l).same_ideal(ideal("u", "w"))
    # (u+v)^2 already lies in (u+v)(u, v)
    assert saturate(IdealBasis([l * P("u"), l * P("v")]), l).is_unit()


def test_quotient_algebra_and_radical():
    # two points (1,1), (-1,1) doubled: u^2 - 1 squared, v - 1
    J = ideal("u^4 - 2*u^2 + 1", "v - 1")
    A = QuotientAlgebra(J, 2)
    assert A.dim == 4
    R = radical_zero_dim(J, chart=2)
    assert QuotientAlgebra(R, 2).dim == 2
    mp = QuotientAlgebra(R, 2).minimal_polynomial(0)
    assert mp == [F.from_int(-1), 0, 1]


def test_projective_radical():
    I = ideal("u^2", "v^2")
    R = radical_zero_dim(I, seed=1)
    assert R.same_ideal(ideal("u", "v"))


def test_not_zero_dimensional():
    with pytest.raises(NotZeroDimensional):
        QuotientAlgebra(affine_gb(ideal("u*v"), 2), 2)


def small_forms():
    return st.lists(st.tuples(st.integers(1, 3), st.integers(0, 10 ** 9)), min_size=2, max_size=3)


def _gens(shape):
    return [random_form(F101, d, random.Random(s)) for d, s in shape]


@settings(max_examples=25, deadline=None)
@given(small_forms())
def test_spoly_closure(shape):
    I = IdealBasis(_gens(shape))
    G = I.gb()
    assert is_groebner(G)
    for g in I.generators:
        assert I.contains(g)


@settings(max_examples=25, deadline=None)
@given(small_forms(), st.randoms(use_true_random=False))
def test_reduced_basis_is_unique_under_shuffles(shape, rnd):
    gens = _gens(shape)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    extra = shuffled[0] * Poly.var(F101, 1) + shuffled[-1] * shuffled[-1]
    a = IdealBasis(gens).gb()
    b = IdealBasis(shuffled + [extra]).gb()
    key = lambda G: sorted(tuple(sorted(g.terms.items())) for g in G)
    assert key(a) == key(b)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_colon_contains_ideal_and_kills_f(s):
    rng = random.Random(s)
    I = IdealBasis([random_form(F101, 2, rng) for _ in range(2)])
    f = random_form(F101, 1, rng)
    K = colon(I, f)
    assert all(K.contains(g) for g in I.generators)
    assert all(I.contains(g * f) for g in K.gb())
