"""Residue fields: finite fields GF(p^s) and the rational field Q.

Elements of GF(p^s) are polynomials in a formal generator ``w`` reduced
modulo the lexicographically least monic irreducible of degree ``s``.
Rational residue fields use :class:`fractions.Fraction` directly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm
from typing import Iterable, Union

from .errors import ResidueDegreeError
from .valgroup import is_prime

FINITE = "finite"
RATIONAL = "rational"


# -- polynomials over F_p as coefficient tuples, lowest degree first -------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm:
        q = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - q * mi) % p
        _trim(a)
    return a


def _is_irreducible(m: tuple[int, ...], p: int) -> bool:
    deg = len(m) - 1
    if deg <= 1:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            if not _poly_mod(list(m), tuple(tail) + (1,), p):
                return False
    return True


@lru_cache(maxsize=None)
def least_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``s`` with the least base-p encoding."""
    for code in range(p**s):
        tail = [(code // p**i) % p for i in range(s)]
        m = tuple(tail) + (1,)
        if _is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# -- fields -----------------------------------------------------------------


@dataclass(frozen=True)
class ResidueField:
    kind: str
    p: int = 0
    s: int = 1
    modulus: tuple[int, ...] = field(default=(), compare=True)

    @property
    def characteristic(self) -> int:
        """Residue characteristic, with 1 standing for characteristic zero."""
        return self.p if self.kind == FINITE else 1

    @property
    def is_finite(self) -> bool:
        return self.kind == FINITE

    @property
    def order(self) -> int:
        return self.p**self.s

    @property
    def one(self):
        return self(1)

    @property
    def zero(self):
        return self(0)

    @property
    def gen(self) -> "FFElement":
        if not self.is_finite or self.s == 1:
            raise ValueError(f"{self} has no formal generator")
        return FFElement(self, (0, 1) + (0,) * (self.s - 2))

    def __call__(self, value) -> "Element":
        if self.kind == RATIONAL:
            if isinstance(value, FFElement):
                raise TypeError("finite field element in a rational residue field")
            return Fraction(value)
        if isinstance(value, FFElement):
            if value.field != self:
                raise TypeError("element belongs to a different field")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} is not defined modulo {self.p}")
            return self(value.numerator) / self(value.denominator)
        if isinstance(value, int):
            return FFElement(self, (value % self.p,) + (0,) * (self.s - 1))
        coeffs = [int(x) % self.p for x in value]
        coeffs = _poly_mod(coeffs, self.modulus, self.p) if self.s > 1 else _trim(coeffs)
        coeffs += [0] * (self.s - len(coeffs))
        return FFElement(self, tuple(coeffs))

    def elements(self) -> Iterable["FFElement"]:
        for cs in product(range(self.p), repeat=self.s):
            yield FFElement(self, tuple(cs))

    def __str__(self) -> str:
        if self.kind == RATIONAL:
            return "Q"
        return f"GF({self.p})" if self.s == 1 else f"GF({self.p}^{self.s})"


@dataclass(frozen=True, eq=True)
class FFElement:
    field: ResidueField
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> "FFElement":
        return self.field(other)

    def __add__(self, other):
        o = self._coerce(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        k = self.field
        if k.s == 1:
            return FFElement(k, (self.coeffs[0] * o.coeffs[0] % k.p,))
        prod = [0] * (2 * k.s - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        return k(prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FFElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        return format_element(self)

    __repr__ = __str__


Element = Union[FFElement, Fraction]


def field_make(spec) -> ResidueField:
    """Build a residue field.

    ``spec`` is ``"Q"``/``"rational"``, a mapping ``{"p": .., "s": ..}``,
    or a ``(p, s)`` pair.
    """
    if spec in ("Q", "rational") or (isinstance(spec, dict) and spec.get("kind") == RATIONAL):
        return ResidueField(RATIONAL)
    if isinstance(spec, dict):
        p, s = spec["p"], spec.get("s", 1)
    else:
        p, s = spec
    p, s = int(p), int(s)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if s < 1:
        raise ValueError("field degree s must be positive")
    modulus = least_irreducible(p, s) if s > 1 else (0, 1)
    return ResidueField(FINITE, p, s, modulus)


def format_element(x: Element) -> str:
    """Polynomial expression in ``w`` (finite) or ``a/b`` (rational)."""
    if isinstance(x, Fraction):
        return str(x)
    terms = []
    for i in reversed(range(len(x.coeffs))):
        c = x.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = "w" if i == 1 else f"w^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) if terms else "0"


def format_modulus(k: ResidueField) -> str:
    terms = []
    for i in reversed(range(len(k.modulus))):
        c = k.modulus[i]
        if not c:
            continue
        mono = "1" if i == 0 else ("w" if i == 1 else f"w^{i}")
        terms.append(mono if c == 1 and i else (str(c) if i == 0 else f"{c}*{mono}"))
    return "+".join(terms)


def describe_element(x: Element) -> str:
    """Element with its field, e.g. ``2*w+1 in GF(9) mod w^2+1``."""
    if isinstance(x, Fraction):
        return f"{x} in Q"
    k = x.field
    if k.s == 1:
        return f"{format_element(x)} in GF({k.p})"
    return f"{format_element(x)} in GF({k.order}) mod {format_modulus(k)}"


# -- root degrees -------------------------------------------------------------


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_order(x: FFElement) -> int:
    """Order of a nonzero element in the cyclic group GF(q)*."""
    if x.is_zero():
        raise ZeroDivisionError("zero has no multiplicative order")
    n = x.field.order - 1
    order = n
    for prime in _factor(n):
        while order % prime == 0 and (x ** (order // prime)) == x.field.one:
            order //= prime
    return order


@lru_cache(maxsize=None)
def order_mod(q: int, n: int) -> int:
    """Least ``k >= 1`` with ``q^k = 1 (mod n)``; ``n`` coprime to ``q``."""
    if n == 1:
        return 1
    k, acc = 1, q % n
    while acc != 1:
        acc = acc * q % n
        k += 1
    return k


def _euler_phi(n: int) -> int:
    out = n
    for prime in _factor(n):
        out = out // prime * (prime - 1)
    return out


@dataclass(frozen=True)
class RootDegreeResult:
    degrees: tuple[int, ...]

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def ambiguous(self) -> bool:
        return len(set(self.degrees)) > 1

    def multiset(self) -> Counter:
        return Counter(self.degrees)


def strip_p_part(k: ResidueField, c: FFElement, m: int) -> tuple[FFElement, int]:
    """Replace ``X^m - c`` by its separable part ``X^m' - c'`` (perfect field)."""
    p = k.p
    pa = 1
    while m % p == 0:
        m //= p
        pa *= p
    if pa > 1:
        # unique pa-th root of c: c^(q^a / pa) for any a with pa | q^a
        qa = k.order
        while qa % pa:
            qa *= k.order
        c = c ** (qa // pa)
    return c, m


def root_degrees(k: ResidueField, c, m: int) -> RootDegreeResult:
    """Degrees over ``k`` of all distinct roots of ``X^m - c``.

    For finite ``k`` the roots of ``X^m' - c`` (m' prime to p) correspond to
    the classes ``(1/o + j) / m'`` in Q/Z, ``o`` the order of ``c``; a root of
    multiplicative order ``n`` has degree ``ord_n(q)``.  For ``k = Q`` only
    ``c = 1`` is supported (cyclotomic degrees).
    """
    if m < 1:
        raise ValueError("m must be positive")
    c = k(c)
    if not c:
        raise ValueError("c must be nonzero")
    if k.kind == RATIONAL:
        if c != 1:
            raise NotImplementedError("rational residue fields admit only c = 1")
        degrees = []
        for d in range(1, m + 1):
            if m % d == 0:
                phi = _euler_phi(d)
                degrees += [phi] * phi
        return RootDegreeResult(tuple(sorted(degrees)))
    c, m = strip_p_part(k, c, m)
    o = multiplicative_order(c)
    q = k.order
    degrees = [order_mod(q, Fraction(1 + j * o, o * m).denominator) for j in range(m)]
    return RootDegreeResult(tuple(sorted(degrees)))


def extension_degree_join(degrees: Iterable[int]) -> int:
    """Degree of the compositum of finite extensions of a finite field."""
    degrees = list(degrees)
    if not degrees:
        raise ValueError("need at least one degree")
    return lcm(*degrees)


def relative_degree(f_sub: int, f_sup: int) -> int:
    if f_sup % f_sub:
        raise ResidueDegreeError(f"residue degree {f_sub} does not divide {f_sup}")
    return f_sup // f_sub


def degree_over(d: int, f_sub: int) -> int:
    """``[k_f(x) : k_f]`` for ``x`` of degree ``d`` over ``k``, ``k_f`` of degree ``f_sub``."""
    return lcm(d, f_sub) // f_sub


