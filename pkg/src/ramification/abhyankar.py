"""Elimination of tame ramification by a finite base extension.

Given an all-tame tower ``L1`` and an arbitrary tower ``L2`` over the same
henselian base ``K`` with perfect residue field, ``L = L1 * L2`` is
unramified over ``L2`` exactly when

    e2' * d_theta == e1 * [L' : L1]

for some unit ``theta`` of ``L' = L1 * L2'``, where ``L2'`` is the largest
tame subextension of ``L2`` and ``e2' = [v L2' : v K]``.  The checker
evaluates the condition at the largest possible ``d_theta``, namely
``[L' res : L1 res]``, and exhibits a unit attaining it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from math import lcm

from .errors import PreconditionError, TameRequired
from .ramify import (
    PURELY_WILD,
    TAME_RAMIFIED,
    UNRAMIFIED,
    RamificationReport,
    absolute_data,
    relative_data,
    residue_field_of,
    unit_kernel,
    unit_residue,
    value_group,
)
from .residue import degree_over
from .tower import GroupElement, RadicalGenerator, Tower, format_group_element, same_base, unit_element
from .valgroup import index, prime_to_p_part, standard_lattice


def compositum(t1: Tower, t2: Tower) -> Tower:
    """``t1`` followed by the generators of ``t2`` not already in ``t1``.

    A generator of ``t2`` whose constant, monomial and order coincide with
    one of ``t1`` denotes the same radical and is dropped; clashing names
    are replaced by the next free ``g<i>``.
    """
    same_base(t1, t2)
    out = t1
    shared = Counter(g.content for g in t1.generators)
    for g in t2.generators:
        if shared[g.content]:
            shared[g.content] -= 1
            continue
        name = g.name if g.name not in out.names else out.next_name()
        out = out.adjoin(RadicalGenerator(name, g.constant, g.exponents, g.order))
    return out


def _e(t: Tower) -> int:
    return index(standard_lattice(t.base.n), value_group(t))


@dataclass(frozen=True)
class DivisibilityResult:
    e1: int
    e2: int
    divides: bool


def necessary_divisibility(t1: Tower, t2: Tower) -> DivisibilityResult:
    same_base(t1, t2)
    e1, e2 = _e(t1), _e(t2)
    return DivisibilityResult(e1, e2, e2 % e1 == 0)


def tame_part(t: Tower) -> Tower:
    """Replace each ``(cM)^(1/p^a r')`` by ``(cM)^(1/r')``; drop those with ``r' = 1``."""
    p = t.p
    if p == 1:
        return t
    gens = []
    for g in t.generators:
        r = g.order
        while r % p == 0:
            r //= p
        if r > 1:
            gens.append(RadicalGenerator(g.name, g.constant, g.exponents, r))
    return Tower(t.base, tuple(gens))


@dataclass(frozen=True)
class TheoremVerdict:
    e1: int
    e2: int
    e2_prime: int
    deg_Lprime_over_L1: int
    d_max: int
    lhs: int
    rhs: int
    condition_holds: bool
    direct_unramified: bool
    divisibility_e1_e2: bool
    witness_theta: GroupElement | None
    lprime_residue_degree: int
    e_compositum: int
    undetermined: bool = False
    witness_text: str = "none"
    note: str = ""

    @property
    def lcm_holds(self) -> bool:
        return self.e_compositum == lcm(self.e1, self.e2)

    def as_dict(self) -> dict:
        return {
            "e1": self.e1,
            "e2": self.e2,
            "e2p": self.e2_prime,
            "deg_lp_l1": self.deg_Lprime_over_L1,
            "d_max": self.d_max,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "condition": self.condition_holds,
            "direct": UNRAMIFIED if self.direct_unramified else "ramified",
            "divisible": self.divisibility_e1_e2,
            "lcm_e": self.e_compositum,
            "witness": self.witness_text,
            "status": "undetermined" if self.undetermined else "determined",
        }


def find_witness(lp: Tower, l1: Tower, d_max: int, f1: int, max_basis: int = 4) -> GroupElement | None:
    """A unit of ``lp`` whose residue has degree ``d_max`` over the residue field of ``l1``.

    Tries the unit 1, each kernel basis unit, then products with exponents in
    ``{-1, 0, 1}`` over the first ``max_basis`` basis units.
    """
    kernel = unit_kernel(lp)
    width = lp.arity
    candidates = [[0] * width] + kernel
    head = kernel[:max_basis]
    for coeffs in product((-1, 0, 1), repeat=len(head)):
        if sum(1 for c in coeffs if c) >= 2:
            candidates.append([sum(c * v[i] for c, v in zip(coeffs, head)) for i in range(width)])
    for kappa in candidates:
        res = unit_residue(lp, unit_element(lp, kappa))
        if res.degrees.ambiguous:
            continue
        if degree_over(res.degree, f1) == d_max:
            return res.unit
    return None


def theorem_check(t1: Tower, t2: Tower) -> TheoremVerdict:
    """Evaluate the unramifiedness criterion for ``L1 * L2 / L2`` and compare with a direct computation."""
    base = same_base(t1, t2)
    if not t1.is_tame():
        raise TameRequired("the first tower must have every root order prime to the residue characteristic")
    p = t1.p
    zn = standard_lattice(base.n)
    notes = []

    e1 = _e(t1)
    e2 = _e(t2)
    l2p = tame_part(t2)
    vg_l2p = value_group(l2p)
    e2p = index(zn, vg_l2p)
    law_ok = vg_l2p == prime_to_p_part(zn, value_group(t2), p)
    if not law_ok:
        notes.append("tame part value group differs from the prime-to-p part")

    lp = compositum(t1, l2p)
    rel = relative_data(lp, t1)
    d_max = rel.f
    deg = rel.degree
    lhs, rhs = e2p * d_max, e1 * deg

    big = compositum(t1, t2)
    direct = relative_data(big, t2).e == 1
    e_big = _e(big)

    r1 = residue_field_of(t1)
    r_lp = residue_field_of(lp)
    ambiguous = rel.residue_degree_ambiguous or r1.ambiguous
    if ambiguous:
        notes.append("ambiguous residue degrees")
    witness = None if ambiguous else find_witness(lp, t1, d_max, r1.f)

    return TheoremVerdict(
        e1=e1,
        e2=e2,
        e2_prime=e2p,
        deg_Lprime_over_L1=deg,
        d_max=d_max,
        lhs=lhs,
        rhs=rhs,
        condition_holds=lhs == rhs,
        direct_unramified=direct,
        divisibility_e1_e2=e2 % e1 == 0,
        witness_theta=witness,
        lprime_residue_degree=r_lp.f,
        e_compositum=e_big,
        undetermined=ambiguous or not law_ok,
        witness_text=format_group_element(lp, witness) if witness is not None else "none",
        note="; ".join(notes),
    )


@dataclass(frozen=True)
class CorollaryResult:
    e1: int
    e2_prime: int
    applicable: bool
    verdict: bool
    consistent: bool

    def as_dict(self) -> dict:
        return {
            "e1": self.e1,
            "e2p": self.e2_prime,
            "applicable": self.applicable,
            "verdict": UNRAMIFIED if self.verdict else "ramified",
            "consistent": self.consistent,
        }


def corollary_check(t1: Tower, t2: Tower) -> CorollaryResult:
    """When ``e1 == e2'``: ``L/L2`` is unramified iff ``L'/L1`` is."""
    same_base(t1, t2)
    if not t1.is_tame():
        raise TameRequired("the first tower must be tame")
    e1 = _e(t1)
    l2p = tame_part(t2)
    e2p = _e(l2p)
    rel = relative_data(compositum(t1, l2p), t1)
    verdict = rel.e == 1
    applicable = e1 == e2p
    direct = relative_data(compositum(t1, t2), t2).e == 1
    consistent = (not applicable) or verdict == direct
    return CorollaryResult(e1, e2p, applicable, verdict, consistent)


@dataclass(frozen=True)
class ProductCheck:
    e: int
    e1: int
    e2: int
    equal: bool
    over_tame: RamificationReport
    over_wild: RamificationReport

    @property
    def e1_times_e2(self) -> int:
        return self.e1 * self.e2

    @property
    def classifications_hold(self) -> bool:
        trivial = self.over_tame.e == 1 and self.over_tame.f == 1
        wild_ok = self.over_tame.classification == PURELY_WILD or trivial
        tame_ok = self.over_wild.classification in (UNRAMIFIED, TAME_RAMIFIED)
        return wild_ok and tame_ok

    def as_dict(self) -> dict:
        return {
            "e": self.e,
            "e1": self.e1,
            "e2": self.e2,
            "e1e2": self.e1_times_e2,
            "equal": self.equal,
            "class_over_tame": self.over_tame.classification,
            "class_over_wild": self.over_wild.classification,
        }


def lemma_product_check(t_tame: Tower, t_wild: Tower) -> ProductCheck:
    """Tame times purely wild: indices multiply; the compositum is wild over one side, tame over the other."""
    same_base(t_tame, t_wild)
    if not t_tame.is_tame():
        raise TameRequired("first tower must be tame")
    w = absolute_data(t_wild)
    if w.classification != PURELY_WILD and not (w.e == 1 and w.f == 1 and w.defect_status == "certified-1"):
        raise PreconditionError(f"second tower is {w.classification}, not purely wild")
    big = compositum(t_tame, t_wild)
    e1, e2, e = _e(t_tame), w.e, _e(big)
    return ProductCheck(
        e=e,
        e1=e1,
        e2=e2,
        equal=e == e1 * e2,
        over_tame=relative_data(big, t_tame),
        over_wild=relative_data(big, t_wild),
    )
