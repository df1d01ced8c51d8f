"""Base valued fields and radical towers over them.

The base is the henselization of ``k(X1, ..., Xn)`` with the monomial
valuation that sends a polynomial to the lexicographic minimum of its
support.  A tower adjoins radicals ``(c * M) ** (1/r)`` of a residue
constant times a Laurent monomial in the base variables.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .errors import BaseMismatch, DimensionError, NotAUnit
from .residue import Element, ResidueField, format_element

RESERVED = {"sqrt", "root", "w"}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class _Infinity:
    """Value of the zero element; compares above every vector."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "Infinity"

    __str__ = __repr__


INFINITY = _Infinity()


def format_vector(v) -> str:
    if v is INFINITY:
        return "inf"
    return "(" + ", ".join(str(x) for x in v) + ")"


@dataclass(frozen=True)
class BaseField:
    residue: ResidueField
    variables: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("a base field needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        for v in self.variables:
            if not _IDENT.match(v) or v in RESERVED:
                raise ValueError(f"invalid variable name {v!r}")

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def p(self) -> int:
        return self.residue.characteristic

    def __str__(self) -> str:
        return f"{self.residue}[{','.join(self.variables)}]"


@dataclass(frozen=True)
class RadicalGenerator:
    """``name = (constant * prod X_j^exponents_j) ** (1/order)``."""

    name: str
    constant: Element
    exponents: tuple[int, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))
        if self.order < 1:
            raise ValueError("radical order must be positive")
        if not _IDENT.match(self.name) or self.name in RESERVED:
            raise ValueError(f"invalid generator name {self.name!r}")
        if not self.constant:
            raise ValueError("radical constant must be nonzero")

    @property
    def value(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.order) for a in self.exponents)

    @property
    def content(self) -> tuple:
        return (self.constant, self.exponents, self.order)

    def is_tame(self, p: int) -> bool:
        return p == 1 or self.order % p != 0

    def radicand(self, variables: Sequence[str]) -> str:
        parts = []
        if self.constant != 1 or not any(self.exponents):
            parts.append(_format_constant(self.constant))
        parts += [_power(v, a) for v, a in zip(variables, self.exponents) if a > 0]
        text = "*".join(parts)
        neg = [_power(v, -a) for v, a in zip(variables, self.exponents) if a < 0]
        if neg:
            text = (text or "1") + "/" + "/".join(neg)
        return text

    def format(self, variables: Sequence[str]) -> str:
        arg = self.radicand(variables)
        if self.order == 1:
            return arg
        if self.order == 2:
            return f"sqrt({arg})"
        return f"root({self.order}, {arg})"


@dataclass(frozen=True)
class Tower:
    base: BaseField
    generators: tuple[RadicalGenerator, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for g in self.generators:
            _check_generator(self.base, g)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def arity(self) -> int:
        return len(self.generators) + self.base.n

    @property
    def p(self) -> int:
        return self.base.p

    def is_tame(self) -> bool:
        return all(g.is_tame(self.p) for g in self.generators)

    def adjoin(self, g: RadicalGenerator) -> "Tower":
        return adjoin(self, g)

    def next_name(self) -> str:
        i = len(self.generators) + 1
        while f"g{i}" in self.names:
            i += 1
        return f"g{i}"

    def describe(self) -> str:
        gens = ", ".join(f"{g.name}={g.format(self.base.variables)}" for g in self.generators)
        return f"{self.base}({gens})" if gens else str(self.base)


def _check_generator(base: BaseField, g: RadicalGenerator) -> None:
    if len(g.exponents) != base.n:
        raise DimensionError(f"generator {g.name} has {len(g.exponents)} exponents, base has {base.n} variables")
    if g.name in base.variables:
        raise ValueError(f"generator name {g.name!r} clashes with a variable")
    k = base.residue
    if k.is_finite:
        if not hasattr(g.constant, "field") or g.constant.field != k:
            raise TypeError(f"constant of {g.name} is not an element of {k}")
    elif g.constant != 1:
        raise ValueError("radical constants must be 1 over a characteristic-0 residue field")


def adjoin(t: Tower, g: RadicalGenerator) -> Tower:
    """Tower with ``g`` appended."""
    if g.name in t.names:
        raise ValueError(f"generator name {g.name!r} already used")
    return Tower(t.base, t.generators + (g,))


def make_generator(base: BaseField, r: int, exponents: Sequence[int], constant=1, name: str = "g1") -> RadicalGenerator:
    return RadicalGenerator(name, base.residue(constant), tuple(exponents), r)


@dataclass(frozen=True)
class GroupElement:
    """``constant * prod g_i^k_i * prod X_j^b_j``; exponents over generators ++ variables."""

    constant: Element
    exponents: tuple[int, ...]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if len(self.exponents) != len(other.exponents):
            raise DimensionError("group elements from towers of different arity")
        return GroupElement(
            self.constant * other.constant,
            tuple(a + b for a, b in zip(self.exponents, other.exponents)),
        )

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(self.constant**k, tuple(k * a for a in self.exponents))

    def inverse(self) -> "GroupElement":
        return self ** -1


def unit_element(t: Tower, kappa: Sequence[int], constant=1) -> GroupElement:
    return GroupElement(t.base.residue(constant), tuple(int(x) for x in kappa))


@dataclass(frozen=True)
class BasePolynomial:
    """Collected polynomial over the base: exponent vector -> nonzero coefficient."""

    terms: tuple[tuple[tuple[int, ...], Element], ...]

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, ...], Element]) -> "BasePolynomial":
        return cls(tuple(sorted(((tuple(e), c) for e, c in d.items() if c), key=lambda t: t[0])))

    def as_dict(self) -> dict:
        return dict(self.terms)

    @property
    def support(self) -> set[tuple[int, ...]]:
        return {e for e, _ in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: "BasePolynomial") -> "BasePolynomial":
        out: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0 * c1) + c1 * c2
        return BasePolynomial.from_dict(out)

    def __add__(self, other: "BasePolynomial") -> "BasePolynomial":
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out[e] + c if e in out else c
        return BasePolynomial.from_dict(out)


@dataclass(frozen=True)
class RationalFunction:
    numerator: BasePolynomial
    denominator: BasePolynomial


# -- valuation --------------------------------------------------------------


def value_of(t: Tower, e: GroupElement) -> tuple[Fraction, ...]:
    """Exact value of a group element (the constant contributes nothing)."""
    if len(e.exponents) != t.arity:
        raise DimensionError(f"element has {len(e.exponents)} exponents, tower arity is {t.arity}")
    m = len(t.generators)
    out = [Fraction(b) for b in e.exponents[m:]]
    for k, g in zip(e.exponents[:m], t.generators):
        if k:
            for j, a in enumerate(g.exponents):
                out[j] += Fraction(k * a, g.order)
    return tuple(out)


def value_of_polynomial(base: BaseField, f: BasePolynomial):
    """Lexicographic minimum of the support, or ``INFINITY`` for zero."""
    if f.is_zero():
        return INFINITY
    for e in f.support:
        if len(e) != base.n:
            raise DimensionError(f"monomial {e} does not match {base.n} variables")
    return tuple(Fraction(x) for x in min(f.support))


def value_of_rational_function(base: BaseField, f: BasePolynomial, g: BasePolynomial):
    if g.is_zero():
        raise ZeroDivisionError("denominator is the zero polynomial")
    vf = value_of_polynomial(base, f)
    if vf is INFINITY:
        return INFINITY
    vg = value_of_polynomial(base, g)
    return tuple(a - b for a, b in zip(vf, vg))


def value(t: Tower, x):
    """Value of anything the parser produces."""
    if isinstance(x, GroupElement):
        if not x.constant:
            return INFINITY
        return value_of(t, x)
    if isinstance(x, BasePolynomial):
        return value_of_polynomial(t.base, x)
    if isinstance(x, RationalFunction):
        return value_of_rational_function(t.base, x.numerator, x.denominator)
    raise TypeError(f"cannot take the value of {type(x).__name__}")


def power_to_constant(t: Tower, e: GroupElement) -> tuple[Element, int]:
    """``(C, s)`` with ``s`` least such that ``e ** s`` is the residue constant ``C``.

    Only value-zero elements qualify; their residue is then an ``s``-th root
    of ``C``.
    """
    if any(value_of(t, e)):
        raise NotAUnit("element has nonzero value")
    m = len(t.generators)
    s = 1
    for k, g in zip(e.exponents[:m], t.generators):
        if k:
            s = lcm(s, g.order // gcd(k, g.order))
    c = e.constant**s
    for k, g in zip(e.exponents[:m], t.generators):
        if k:
            c = c * g.constant ** (k * s // g.order)
    return c, s


# -- printing ---------------------------------------------------------------


def _format_constant(c: Element) -> str:
    text = format_element(c)
    if any(ch in text for ch in "+-/") and not (text.startswith("-") and text[1:].isdigit()):
        return f"({text})"
    return text


def _power(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


def format_group_element(t: Tower, e: GroupElement) -> str:
    symbols = t.names + t.base.variables
    num = [_power(s, k) for s, k in zip(symbols, e.exponents) if k > 0]
    den = [_power(s, -k) for s, k in zip(symbols, e.exponents) if k < 0]
    parts = []
    if e.constant != 1 or not num:
        parts.append(_format_constant(e.constant))
    parts += num
    text = "*".join(parts)
    if den:
        text += "/" + "/".join(den)
    return text


def format_polynomial(base: BaseField, f: BasePolynomial) -> str:
    if f.is_zero():
        return "0"
    out = []
    for e, c in sorted(f.terms, key=lambda t: t[0], reverse=True):
        mono = [_power(v, a) for v, a in zip(base.variables, e) if a]
        parts = ([] if c == 1 and mono else [_format_constant(c)]) + mono
        out.append("*".join(parts))
    return " + ".join(out)


def same_base(*towers: Tower) -> BaseField:
    base = towers[0].base
    for t in towers[1:]:
        if t.base != base:
            raise BaseMismatch(f"towers live over different bases: {base} vs {t.base}")
    return base


def tower_from(base: BaseField, gens: Iterable[RadicalGenerator]) -> Tower:
    return Tower(base, tuple(gens))
