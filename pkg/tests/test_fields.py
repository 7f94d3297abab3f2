from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from cuspidal_lab.fields import (QQ, CompositeCharacteristic, FieldElem, NonResidue, NoSuchRoot,
                                 ReducibleModulus, find_primitive_nth_root, is_prime, make_field,
                                 parse_field, sqrt_of)

F457 = make_field("prime", 457)
F7_2 = make_field("extension", 7, "t^2+1")
Q3 = parse_field("Q[t]/t^2+3")

FIELDS = [F457, F7_2, Q3, QQ, make_field("prime", 2)]


def fractions(bound):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, 50))


def elems(F):
    if F.kind == "rationals":
        return fractions(10 ** 6)
    if F.kind == "extension" and F.characteristic == 0:
        return st.tuples(fractions(1000), fractions(1000))
    return st.integers(0, 10 ** 6).map(lambda n: F.random(random.Random(n)))


@pytest.mark.parametrize("F", FIELDS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_field_axioms(F, data):
    a, b, c = (data.draw(elems(F)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == F.zero
    assert F.mul(a, F.one) == a
    if not F.is_zero(a):
        assert F.mul(a, F.inv(a)) == F.one


def test_fermat_little():
    for a in (2, 3, 100, 456):
        assert F457.pow(a, 456) == 1


def test_extension_frobenius_has_order_two():
    x = (3, 5)
    y = F7_2.pow(x, 7)
    assert y != x and F7_2.pow(y, 7) == x


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        F457.inv(0)


def test_bad_fields():
    with pytest.raises(CompositeCharacteristic):
        make_field("prime", 455)
    with pytest.raises(ReducibleModulus):
        make_field("extension", 5, "t^2+1")  # -1 is a square mod 5
    with pytest.raises(ReducibleModulus):
        parse_field("Q[t]/t^2-4")


def test_parse_round_trip():
    assert parse_field("F457") == F457
    assert parse_field("Q") is QQ
    z = F7_2.parse_elem("2*t+3")
    assert F7_2.format_elem(z) == "2*t+3"


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(2 ** 31 - 1)


def test_primitive_roots_mod_457():
    z = find_primitive_nth_root(F457, 12).raw
    assert F457.pow(z, 12) == 1
    assert all(F457.pow(z, k) != 1 for k in (1, 2, 3, 4, 6))
    with pytest.raises(NoSuchRoot):
        find_primitive_nth_root(F457, 5)


def test_primitive_root_is_seed_independent():
    assert find_primitive_nth_root(F457, 12, seed=0) == find_primitive_nth_root(F457, 12, seed=9)


def test_sqrt():
    eta = sqrt_of(F457, -3)
    assert eta * eta == F457.from_int(-3)
    assert sqrt_of(QQ, Fraction(9, 4)).raw == Fraction(3, 2)
    with pytest.raises(NonResidue):
        sqrt_of(make_field("prime", 7), 3)


def test_field_elem_operators():
    a = FieldElem(F457, 5)
    assert int(a * a - 25) == 0
    assert (a / a) == 1
    assert (-a).raw == 452
    assert a ** 456 == 1
