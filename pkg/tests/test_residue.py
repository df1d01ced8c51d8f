from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramification.errors import ResidueDegreeError
from ramification.residue import (
    degree_over,
    describe_element,
    extension_degree_join,
    field_make,
    format_element,
    least_irreducible,
    multiplicative_order,
    relative_degree,
    root_degrees,
)

F3 = field_make((3, 1))
F9 = field_make((3, 2))
F7 = field_make((7, 1))
Q = field_make("Q")

FIELDS = [field_make(ps) for ps in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1)]]


def test_field_names_and_moduli():
    assert str(F3) == "GF(3)" and str(F9) == "GF(3^2)" and str(Q) == "Q"
    assert F9.modulus == (1, 0, 1)  # w^2 + 1
    assert least_irreducible(2, 2) == (1, 1, 1)
    assert F3.characteristic == 3 and Q.characteristic == 1


def test_bad_fields():
    with pytest.raises(ValueError):
        field_make((4, 1))
    with pytest.raises(ValueError):
        field_make((3, 0))


def test_arithmetic_in_gf9():
    w = F9.gen
    assert w * w == F9(-1)
    x = F9([1, 2])
    assert format_element(x) == "2*w+1"
    assert describe_element(x) == "2*w+1 in GF(9) mod w^2+1"
    assert x * x.inverse() == F9.one
    assert multiplicative_order(w) == 4


def test_rational_conversion():
    assert F7(Fraction(1, 2)) == F7(4)
    with pytest.raises(ZeroDivisionError):
        F3(Fraction(1, 3))
    assert Q(3) == Fraction(3)


@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(k, data):
    elems = list(k.elements())
    a, b, c = (data.draw(st.sampled_from(elems)) for _ in range(3))
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == k.zero
    if a:
        assert a * a.inverse() == k.one
        assert a ** (k.order - 1) == k.one


def test_root_degree_examples():
    assert root_degrees(F3, 2, 2).degrees == (2, 2)
    assert root_degrees(F3, 1, 2).degrees == (1, 1)
    assert root_degrees(F3, 1, 4).degrees == (1, 1, 2, 2)
    assert root_degrees(F7, -1, 2).degrees == (2, 2)
    assert root_degrees(F3, 2, 1).degrees == (1,)


def test_inseparable_part_collapses():
    # X^3 - c over GF(3) has a single (triple) root
    assert root_degrees(F3, 2, 3).degrees == (1,)
    assert root_degrees(F3, 2, 6).degrees == (2, 2)


def test_ambiguity_flag():
    res = root_degrees(F3, 1, 4)
    assert res.ambiguous and res.min_degree == 1 and res.max_degree == 2
    assert not root_degrees(F3, 2, 2).ambiguous


def test_rational_roots_of_unity():
    assert root_degrees(Q, 1, 2).degrees == (1, 1)
    assert root_degrees(Q, 1, 4).degrees == (1, 1, 2, 2)
    assert root_degrees(Q, 1, 1).degrees == (1,)
    with pytest.raises(NotImplementedError):
        root_degrees(Q, 2, 2)


def test_degree_helpers():
    assert extension_degree_join([2, 3]) == 6
    assert relative_degree(2, 4) == 2
    with pytest.raises(ResidueDegreeError):
        relative_degree(2, 3)
    with pytest.raises(ValueError):
        extension_degree_join([])
    assert degree_over(2, 2) == 1
    assert degree_over(4, 2) == 2


@given(st.sampled_from(FIELDS), st.integers(1, 12), st.data())
def test_root_count_is_separable_degree(k, m, data):
    c = data.draw(st.sampled_from([x for x in k.elements() if x]))
    res = root_degrees(k, c, m)
    mp = m
    while mp % k.p == 0:
        mp //= k.p
    assert len(res.degrees) == mp
    # every root of degree d is fixed by Frobenius^d
    for d in res.multiset():
        assert res.multiset()[d] % d == 0
