"""Seeded oracle-versus-main comparisons shared by the oracle and acceptance tests."""

import random
from fractions import Fraction

from ramification import oracle
from ramification.errors import GuardExceeded
from ramification.residue import field_make, root_degrees
from ramification.valgroup import canonical_basis, contains, index

# keep each brute-force field scan small enough for a fast suite
FIELD_BUDGET = 20_000


def _random_lattice(rng, n, max_den=12, extra=2):
    gens = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(0, extra)):
        gens.append([Fraction(rng.randint(-12, 12), rng.randint(1, max_den)) for _ in range(n)])
    return canonical_basis(n, gens)


def index_agreement(instances=500, seed=1):
    rng = random.Random(seed)
    compared = mismatches = 0
    while compared < instances:
        n = rng.randint(1, 3)
        sup = _random_lattice(rng, n)
        k = rng.randint(1, 3)
        sub = canonical_basis(n, [[k * x for x in row] for row in sup.basis] + [list(rng.choice(sup.basis))])
        try:
            slow = oracle.index_by_coset_enumeration(sub, sup)
        except GuardExceeded:
            continue
        compared += 1
        mismatches += slow != index(sub, sup)
    return compared, mismatches


def membership_agreement(instances=500, seed=2):
    rng = random.Random(seed)
    compared = mismatches = 0
    while compared < instances:
        n = rng.randint(1, 3)
        lat = _random_lattice(rng, n, max_den=6, extra=1)
        v = [sum((rng.randint(-2, 2) * row[j] for row in lat.basis), Fraction(0)) for j in range(n)]
        if rng.random() < 0.5:
            j = rng.randrange(n)
            v[j] += Fraction(rng.randint(-3, 3), rng.randint(1, 12))
        try:
            slow = oracle.membership_by_integer_solve(lat, v)
        except GuardExceeded:
            continue
        compared += 1
        mismatches += slow != contains(lat, v)
    return compared, mismatches


FIELDS = [(p, s) for p, s in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2),
                              (7, 1), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1), (31, 1),
                              (37, 1), (41, 1), (43, 1), (47, 1)]]


def root_degree_agreement(instances=500, seed=3):
    """Fields GF(q) with q <= 49 and exponents m <= 8."""
    rng = random.Random(seed)
    compared = mismatches = 0
    while compared < instances:
        p, s = rng.choice(FIELDS)
        k = field_make((p, s))
        coeffs = [rng.randrange(p) for _ in range(s)]
        if not any(coeffs):
            continue
        c = k(coeffs)
        m = rng.randint(1, 8)
        fast = root_degrees(k, c, m)
        if k.order ** fast.max_degree > FIELD_BUDGET:
            continue
        slow = oracle.root_degrees_by_search(p, s, list(c.coeffs), m, modulus=k.modulus)
        compared += 1
        mismatches += slow != fast.degrees
    return compared, mismatches
