"""Ramification data of radical towers: value groups, residue degrees, defect, class.

The value group of a tower is generated by Z^n and the generator values.
The residue field is generated over the base residue field by residues of
units, i.e. of products ``prod g_i^k_i * prod X_j^b_j`` of value zero; the
exponent vectors of those products form the integer kernel of the value map.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import lcm, prod

from .errors import AmbiguousResidue, NotAUnit, NotSubtower
from .residue import (
    Element,
    RootDegreeResult,
    degree_over,
    extension_degree_join,
    format_element,
    relative_degree,
    root_degrees,
)
from .tower import GroupElement, Tower, power_to_constant, same_base, unit_element, value_of
from .valgroup import ValueLattice, canonical_basis, index, integer_kernel, standard_lattice

CERTIFIED = "certified-1"
ASSUMED = "assumed-1"
UNDETERMINED = "undetermined"

UNRAMIFIED = "unramified"
TAME_RAMIFIED = "tame-ramified"
PURELY_WILD = "purely-wild"
MIXED = "mixed"


@dataclass(frozen=True)
class ResidueGenerator:
    """A unit ``u`` of the tower with ``u ** s == constant``."""

    unit: GroupElement
    constant: Element
    s: int
    degrees: RootDegreeResult

    @property
    def degree(self) -> int:
        return self.degrees.min_degree

    def format(self) -> str:
        c = format_element(self.constant)
        if self.s == 1:
            return c
        if "+" in c or "/" in c or "-" in c:
            c = f"({c})"
        return f"{c}^(1/{self.s})"


@dataclass(frozen=True)
class ResidueData:
    f: int
    ambiguous: bool
    generators: tuple[ResidueGenerator, ...]


@dataclass(frozen=True)
class RamificationReport:
    e: int
    f: int
    degree: int
    defect_status: str
    classification: str
    value_group: ValueLattice
    residue_degree_ambiguous: bool = False
    residue_generators: tuple[ResidueGenerator, ...] = field(default=())
    residue_field: str = ""

    @property
    def determined(self) -> bool:
        return self.classification != UNDETERMINED

    def as_dict(self) -> dict:
        return {
            "e": self.e,
            "f": self.f,
            "degree": self.degree,
            "defect": self.defect_status,
            "class": self.classification,
            "value_group": self.value_group.format(),
            "residue_ambiguous": self.residue_degree_ambiguous,
            "residue": self.residue_field,
        }


def value_group(t: Tower) -> ValueLattice:
    n = t.base.n
    gens = [[int(i == j) for j in range(n)] for i in range(n)]
    gens += [g.value for g in t.generators]
    return canonical_basis(n, gens)


def unit_kernel(t: Tower) -> list[list[int]]:
    """Basis of exponent vectors (generators ++ variables) with value zero."""
    scale = lcm(*(g.order for g in t.generators)) if t.generators else 1
    n = t.base.n
    rows = [[a * scale // g.order for a in g.exponents] for g in t.generators]
    rows += [[scale * int(i == j) for j in range(n)] for i in range(n)]
    return integer_kernel(rows, n)


def unit_residue(t: Tower, unit: GroupElement) -> ResidueGenerator:
    c, s = power_to_constant(t, unit)
    return ResidueGenerator(unit, c, s, root_degrees(t.base.residue, c, s))


def residue_field_of(t: Tower) -> ResidueData:
    gens = tuple(unit_residue(t, unit_element(t, kappa)) for kappa in unit_kernel(t))
    f = extension_degree_join([g.degree for g in gens] or [1])
    ambiguous = any(g.degrees.ambiguous for g in gens)
    return ResidueData(f, ambiguous, gens)


def describe_residue_field(t: Tower, res: ResidueData) -> str:
    k = str(t.base.residue)
    adj = [g.format() for g in res.generators if g.degree > 1]
    return f"{k}({', '.join(adj)})" if adj else k


def _classify(e: int, f: int, p: int, defect: str, ambiguous: bool, wild_orders: bool) -> str:
    if ambiguous or defect != CERTIFIED:
        return UNDETERMINED
    if p == 1 or e % p:
        return UNRAMIFIED if e == 1 else TAME_RAMIFIED
    rest = e
    while rest % p == 0:
        rest //= p
    if rest == 1 and f == 1 and wild_orders:
        return PURELY_WILD
    return MIXED


def _report(t: Tower, gens, e: int, f: int, ambiguous: bool, vg: ValueLattice, res: ResidueData) -> RamificationReport:
    p = t.p
    bound = prod(g.order for g in gens)
    tame = all(g.is_tame(p) for g in gens)
    if ambiguous:
        defect = UNDETERMINED
    elif tame or e * f == bound:
        defect = CERTIFIED
    else:
        defect = ASSUMED
    wild = any(not g.is_tame(p) for g in gens)
    return RamificationReport(
        e=e,
        f=f,
        degree=e * f,
        defect_status=defect,
        classification=_classify(e, f, p, defect, ambiguous, wild),
        value_group=vg,
        residue_degree_ambiguous=ambiguous,
        residue_generators=res.generators,
        residue_field=describe_residue_field(t, res),
    )


def absolute_data(t: Tower) -> RamificationReport:
    """Ramification data of the tower over its base field."""
    vg = value_group(t)
    e = index(standard_lattice(t.base.n), vg)
    res = residue_field_of(t)
    return _report(t, t.generators, e, res.f, res.ambiguous, vg, res)


def extra_generators(big: Tower, sub: Tower):
    """Generators of ``big`` not accounted for by ``sub`` (matched by content)."""
    same_base(big, sub)
    pool = Counter(g.content for g in big.generators)
    for g in sub.generators:
        if pool[g.content] <= 0:
            raise NotSubtower(f"generator {g.name}={g.format(sub.base.variables)} of the subtower is not in the big tower")
        pool[g.content] -= 1
    out = []
    for g in big.generators:
        if pool[g.content] > 0:
            out.append(g)
            pool[g.content] -= 1
    return out


def relative_data(big: Tower, sub: Tower) -> RamificationReport:
    """Ramification data of ``big`` over its subtower ``sub``."""
    extras = extra_generators(big, sub)
    vg_big, vg_sub = value_group(big), value_group(sub)
    e = index(vg_sub, vg_big)
    rb, rs = residue_field_of(big), residue_field_of(sub)
    ambiguous = rb.ambiguous or rs.ambiguous
    if ambiguous:
        f = lcm(rb.f, rs.f) // rs.f
    else:
        f = relative_degree(rs.f, rb.f)
    return _report(big, extras, e, f, ambiguous, vg_big, rb)


def residue_degree_over(big: Tower, sub: Tower, theta: GroupElement) -> int:
    """``[sub_res(theta_res) : sub_res]`` for a unit ``theta`` of ``big``."""
    extra_generators(big, sub)
    if any(value_of(big, theta)):
        raise NotAUnit("theta must have value zero")
    r = unit_residue(big, theta)
    if r.degrees.ambiguous:
        raise AmbiguousResidue(
            f"residue of theta is a root of X^{r.s} - {format_element(r.constant)} with degrees {sorted(set(r.degrees.degrees))}"
        )
    rs = residue_field_of(sub)
    if rs.ambiguous:
        raise AmbiguousResidue("residue field of the subtower is ambiguous")
    return degree_over(r.degree, rs.f)


