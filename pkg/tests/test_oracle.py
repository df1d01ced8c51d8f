from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from ramification import oracle
from ramification.errors import GuardExceeded
from ramification.residue import field_make, root_degrees
from ramification.valgroup import canonical_basis, index, standard_lattice

import agreement
from conftest import lattice_chains

Z1, Z2 = standard_lattice(1), standard_lattice(2)


def test_coset_examples():
    half2 = canonical_basis(2, [[F(1, 2), 0], [0, F(1, 2)]])
    assert oracle.index_by_coset_enumeration(Z2, half2) == 4
    assert oracle.index_by_coset_enumeration(half2, half2) == 1
    assert oracle.index_by_coset_enumeration(Z1, canonical_basis(1, [[F(1, 12)]])) == 12
    mixed = canonical_basis(2, [[F(1, 2), 0], [0, 1], [F(1, 3), F(1, 3)]])
    assert oracle.index_by_coset_enumeration(Z2, mixed) == 6


def test_coset_guard():
    big = canonical_basis(2, [[F(1, 200), 0], [0, F(1, 200)]])
    with pytest.raises(GuardExceeded):
        oracle.index_by_coset_enumeration(Z2, big)
    with pytest.raises(ValueError):
        oracle.index_by_coset_enumeration(canonical_basis(1, [[F(1, 2)]]), canonical_basis(1, [[F(1, 3)]]))


def test_membership_examples():
    assert not oracle.membership_by_integer_solve(Z2, [F(1, 2), 0])
    assert oracle.membership_by_integer_solve(canonical_basis(2, [[F(1, 5), F(2, 7)], [0, 1]]), [0, 0])
    assert oracle.membership_by_integer_solve(canonical_basis(1, [[F(1, 6)]]), [F(5, 6)])
    lat = canonical_basis(2, [[F(1, 2), 0], [0, F(1, 3)]])
    assert oracle.membership_by_integer_solve(lat, [F(3, 2), F(-2, 3)])


def test_membership_guard():
    lat = canonical_basis(3, [[F(1, 97), 0, 0], [0, F(1, 89), 0], [0, 0, 1]])
    with pytest.raises(GuardExceeded):
        oracle.membership_by_integer_solve(lat, [50, 50, 0], guard=1000)


def test_root_search_examples():
    assert oracle.root_degrees_by_search(3, 1, 2, 2) == (2, 2)
    assert oracle.root_degrees_by_search(3, 1, 1, 2) == (1, 1)
    assert oracle.root_degrees_by_search(3, 1, 1, 4) == (1, 1, 2, 2)
    k = field_make((3, 2))
    assert oracle.root_degrees_by_search(3, 2, list(k.gen.coeffs), 8, modulus=k.modulus) == root_degrees(k, k.gen, 8).degrees


def test_root_search_guard():
    with pytest.raises(GuardExceeded):
        oracle.root_degrees_by_search(47, 1, 5, 7, guard=10**4)


def test_index_oracle_agreement():
    compared, mismatches = agreement.index_agreement()
    assert compared >= 500 and mismatches == 0


def test_membership_oracle_agreement():
    compared, mismatches = agreement.membership_agreement()
    assert compared >= 500 and mismatches == 0


def test_root_degree_oracle_agreement():
    compared, mismatches = agreement.root_degree_agreement()
    assert compared >= 500 and mismatches == 0


@settings(max_examples=100)
@given(lattice_chains(max_den=6))
def test_index_oracle_property(pair):
    a, b = pair
    assert oracle.index_by_coset_enumeration(a, b) == index(a, b)
