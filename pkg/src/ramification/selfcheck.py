"""Cross-check main-path results against the brute-force oracles."""

from __future__ import annotations

from . import oracle
from .errors import GuardExceeded, InvariantViolation
from .ramify import residue_field_of, value_group
from .residue import FFElement
from .tower import Tower
from .valgroup import index, standard_lattice


def check_index(sub, sup) -> bool:
    """``True`` if compared, ``False`` if the oracle guard was hit."""
    try:
        slow = oracle.index_by_coset_enumeration(sub, sup)
    except GuardExceeded:
        return False
    fast = index(sub, sup)
    if slow != fast:
        raise InvariantViolation(f"index {fast} but coset enumeration gives {slow} for {sub.format()} in {sup.format()}")
    return True


def check_residues(t: Tower) -> bool:
    k = t.base.residue
    if not k.is_finite:
        return False
    compared = True
    for g in residue_field_of(t).generators:
        c = g.constant
        coeffs = list(c.coeffs) if isinstance(c, FFElement) else [int(c)]
        try:
            slow = oracle.root_degrees_by_search(k.p, k.s, coeffs, g.s, modulus=k.modulus)
        except GuardExceeded:
            compared = False
            continue
        if slow != tuple(sorted(g.degrees.degrees)):
            raise InvariantViolation(
                f"root degrees of X^{g.s} - {c} over {k}: {sorted(g.degrees.degrees)} vs search {list(slow)}"
            )
    return compared


def check_tower_pair(big: Tower, sub: Tower | None = None) -> str:
    """``"ok"`` when every oracle comparison ran, ``"partial"`` when a guard skipped some."""
    base_lattice = standard_lattice(big.base.n) if sub is None else value_group(sub)
    full = check_index(base_lattice, value_group(big))
    full = check_residues(big) and full
    if sub is not None:
        full = check_residues(sub) and full
    return "ok" if full else "partial"
