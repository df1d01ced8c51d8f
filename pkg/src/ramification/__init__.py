"""Exact ramification data for radical towers over henselized rational function fields."""

from .abhyankar import (
    TheoremVerdict,
    compositum,
    corollary_check,
    lemma_product_check,
    necessary_divisibility,
    tame_part,
    theorem_check,
)
from .errors import (
    AmbiguousResidue,
    BaseMismatch,
    DimensionError,
    GuardExceeded,
    InvariantViolation,
    NotAUnit,
    NotSubgroup,
    NotSubtower,
    ParseError,
    PreconditionError,
    RamificationError,
    RankError,
    ResidueDegreeError,
    TameRequired,
)
from .parser import parse_element, parse_generator, parse_tower
from .ramify import RamificationReport, absolute_data, relative_data, residue_degree_over, unit_kernel, value_group
from .residue import ResidueField, field_make, root_degrees
from .tower import BaseField, GroupElement, RadicalGenerator, Tower, adjoin, value
from .valgroup import (
    ValueLattice,
    canonical_basis,
    contains,
    index,
    lattice_sum,
    prime_to_p_part,
    quotient_invariants,
    standard_lattice,
)

__version__ = "0.1.0"
