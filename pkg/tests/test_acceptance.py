"""Acceptance criteria: exact integer fixtures, the equivalence sweep and the oracle suites.

Each criterion prints one PASS/FAIL line (collected into the pytest terminal
summary) and must finish within one second.  Run standalone with
``python tests/test_acceptance.py``.
"""

import time
from contextlib import contextmanager

import pytest

import agreement
from conftest import ACCEPTANCE_LINES
from ramification.abhyankar import compositum, corollary_check, lemma_product_check, necessary_divisibility, theorem_check
from ramification.parser import parse_element, parse_tower
from ramification.ramify import PURELY_WILD, TAME_RAMIFIED, UNRAMIFIED, absolute_data, relative_data, residue_degree_over
from ramification.residue import field_make
from ramification.sweep import SweepParams, check_case, generate, run_sweep
from ramification.tower import BaseField

TIME_LIMIT = 1.0
QXY = BaseField(field_make("Q"), ("X", "Y"))


def over(p):
    return BaseField(field_make((p, 1)), ("t",))


@contextmanager
def criterion(label):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < TIME_LIMIT
        status = "PASS" if ok and within else "FAIL"
        note = "" if within else f" exceeded {TIME_LIMIT:.0f}s"
        line = f"{status} criterion {label} ({elapsed:.3f}s){note}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert within, line


def test_criterion_1_sqrt_x_sqrt_y():
    with criterion("1: sqrt(X) | sqrt(Y) is ramified although e1 | e2"):
        l1, l2 = parse_tower(QXY, ["sqrt(X)"]), parse_tower(QXY, ["sqrt(Y)"])
        l = compositum(l1, l2)
        r1, r2, r = absolute_data(l1), absolute_data(l2), absolute_data(l)
        assert (r1.e, r1.degree, r2.e, r2.degree) == (2, 2, 2, 2)
        assert r1.value_group.format() == "1/2 [1 0; 0 2]"
        assert r2.value_group.format() == "1/2 [2 0; 0 1]"
        assert (r.degree, r.e) == (4, 4)
        assert r.value_group.format() == "1/2 [1 0; 0 1]"
        assert r1.f == r2.f == r.f == 1
        assert relative_data(l, l2).e == 2
        assert necessary_divisibility(l1, l2).divides
        v = theorem_check(l1, l2)
        assert not v.direct_unramified and v.divisibility_e1_e2


def test_criterion_2_sqrt_cbrt():
    with criterion("2: sqrt(X) | cbrt(Y) has e = lcm but is ramified"):
        v = theorem_check(parse_tower(QXY, ["sqrt(X)"]), parse_tower(QXY, ["root(3, Y)"]))
        assert (v.e1, v.e2, v.e_compositum) == (2, 3, 6)
        assert v.lcm_holds and not v.direct_unramified


def test_criterion_3_f3():
    with criterion("3: GF(3), sqrt(t) | root(4, 2t) is unramified"):
        f3 = over(3)
        l1, l2 = parse_tower(f3, ["sqrt(t)"]), parse_tower(f3, ["root(4, 2*t)"])
        l = compositum(l1, l2)
        rel = relative_data(l, l1)
        assert (rel.degree, rel.e, rel.f) == (4, 2, 2)
        v = theorem_check(l1, l2)
        assert (v.e2_prime, v.d_max, v.e1, v.deg_Lprime_over_L1) == (4, 2, 2, 4)
        assert v.lhs == v.rhs == 8 and v.condition_holds
        assert v.direct_unramified
        r = absolute_data(l)
        assert r.f == 2 and r.residue_field == "GF(3)(2^(1/2))"


@pytest.mark.parametrize("p", [7, 11])
def test_criterion_4_minus_one_nonsquare(p):
    with criterion(f"4: GF({p}), sqrt(t) | sqrt(-t) is unramified"):
        f = over(p)
        l1, l2 = parse_tower(f, ["sqrt(t)"]), parse_tower(f, ["sqrt(-t)"])
        l = compositum(l1, l2)
        v = theorem_check(l1, l2)
        assert (v.e1, v.e2, v.e2_prime) == (2, 2, 2)
        assert residue_degree_over(l, l1, parse_element("g1/g2", l)) == 2
        assert relative_data(l, l1).classification == UNRAMIFIED
        c = corollary_check(l1, l2)
        assert c.applicable and c.verdict and c.consistent
        assert v.condition_holds and v.direct_unramified == c.verdict


def test_criterion_5_tame_times_wild():
    with criterion("5: GF(3), sqrt(t) | cbrt(t) has e = 6 = 2 * 3"):
        f3 = over(3)
        res = lemma_product_check(parse_tower(f3, ["sqrt(t)"]), parse_tower(f3, ["root(3, t)"]))
        assert res.e == 6 == res.e1 * res.e2 and res.equal
        assert res.over_tame.classification == PURELY_WILD
        assert res.over_wild.classification == TAME_RAMIFIED


def _sweep():
    return run_sweep(generate(SweepParams()))


def test_criterion_6_equivalence_sweep():
    with criterion("6: criterion agrees with direct computation on the sweep"):
        s = _sweep()
        assert s.total >= 200
        assert s.disagreements == 0, s.failures
        assert s.agreements == s.total - s.skipped_ambiguous
        ACCEPTANCE_LINES.append(
            f"     sweep: total={s.total} agreements={s.agreements} skipped={s.skipped_ambiguous} unramified={s.unramified}"
        )


@pytest.mark.parametrize(
    "name,run",
    [
        ("index_by_coset_enumeration", agreement.index_agreement),
        ("membership_by_integer_solve", agreement.membership_agreement),
        ("root_degrees_by_search", agreement.root_degree_agreement),
    ],
)
def test_criterion_7_oracles(name, run):
    with criterion(f"7: {name} agrees with the main path"):
        compared, mismatches = run()
        assert compared >= 500 and mismatches == 0


def test_criterion_8_necessity():
    with criterion("8: unramified forces e1 | e2 and lcm; neither converse holds"):
        for case in generate(SweepParams()):
            status, v, _ = check_case(case)
            if status == "ok" and v.direct_unramified:
                assert v.divisibility_e1_e2 and v.lcm_holds
        ex = theorem_check(parse_tower(QXY, ["sqrt(X)"]), parse_tower(QXY, ["sqrt(Y)"]))
        assert ex.divisibility_e1_e2 and not ex.direct_unramified
        sc = theorem_check(parse_tower(QXY, ["sqrt(X)"]), parse_tower(QXY, ["root(3, Y)"]))
        assert sc.lcm_holds and not sc.direct_unramified


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
