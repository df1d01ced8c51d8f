"""Brute-force cross-checks for the lattice and residue computations.

Nothing here calls into the main algorithms: lattices are read only through
their ``basis`` rows, and finite fields are rebuilt from scratch with
discrete-log tables.  Every routine has a hard size guard and raises
:class:`GuardExceeded` instead of truncating.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .errors import GuardExceeded

INDEX_GUARD = 10**4
BOX_GUARD = 10**6
FIELD_GUARD = 10**6


def _inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(i for i in range(col, n) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


def _times(v: Sequence[Fraction], m: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    return [sum((v[i] * m[i][j] for i in range(len(v))), Fraction(0)) for j in range(len(m[0]))]


def index_by_coset_enumeration(sub, sup, guard: int = INDEX_GUARD) -> int:
    """Number of cosets of ``sub`` in ``sup``, by closing {0} under the generators of ``sup``."""
    inv = _inverse(sub.basis)
    steps = [tuple(_times(row, inv)) for row in sup.basis]

    def reduce(x):
        return tuple(c - (c.numerator // c.denominator) for c in x)

    zero = tuple(Fraction(0) for _ in steps[0])
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for st in steps:
                y = reduce(tuple(a + b for a, b in zip(x, st)))
                if y not in seen:
                    seen.add(y)
                    if len(seen) > guard:
                        raise GuardExceeded(f"more than {guard} cosets")
                    nxt.append(y)
        frontier = nxt
    # every sub basis row must land on the zero coset for sub to lie inside sup
    inv_sup = _inverse(sup.basis)
    for row in sub.basis:
        if any(c.denominator != 1 for c in _times(row, inv_sup)):
            raise ValueError("sub is not contained in sup")
    return len(seen)


def membership_by_integer_solve(lat, v: Sequence, guard: int = BOX_GUARD) -> bool:
    """Search integer coefficient vectors in a box bounded by ``|v| @ |B^-1|``."""
    basis = [[Fraction(x) for x in r] for r in lat.basis]
    v = [Fraction(x) for x in v]
    n = len(basis)
    if len(v) != n:
        raise ValueError("dimension mismatch")
    if not any(v):
        return True
    inv = _inverse(basis)
    bounds = []
    for j in range(n):
        b = sum((abs(v[i]) * abs(inv[i][j]) for i in range(n)), Fraction(0))
        bounds.append(b.numerator // b.denominator)
    size = 1
    for b in bounds[:-1]:
        size *= 2 * b + 1
    if size > guard:
        raise GuardExceeded(f"coefficient box of size {size}")
    last = basis[-1]
    for head in product(*(range(-b, b + 1) for b in bounds[:-1])):
        rest = [v[k] - sum((head[i] * basis[i][k] for i in range(n - 1)), Fraction(0)) for k in range(n)]
        ratio = None
        ok = True
        for r, l in zip(rest, last):
            if l == 0:
                if r != 0:
                    ok = False
                    break
            elif ratio is None:
                ratio = r / l
            elif r / l != ratio:
                ok = False
                break
        if ok and ratio is not None and ratio.denominator == 1 and abs(ratio) <= bounds[-1]:
            return True
    return False


# -- finite fields from primitive polynomials -----------------------------


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    return out + ([n] if n > 1 else [])


class _LogField:
    """GF(p^n) with elements coded as base-p integers and discrete log tables."""

    def __init__(self, p: int, n: int):
        self.p, self.n, self.size = p, n, p**n
        order = self.size - 1
        one = [1] + [0] * (n - 1)
        x = [0, 1] + [0] * (n - 2) if n > 1 else None
        # constant term varies fastest: the norm of a primitive element must generate GF(p)*
        for rev in product(range(p), repeat=n):
            tail = rev[::-1]
            if tail[0] == 0:
                continue
            gen = x if n > 1 else [(-tail[0]) % p]
            # gen is primitive iff gen^order == 1 and gen^(order/l) != 1 for every prime l | order
            if self._pow(gen, order, tail) != one:
                continue
            if all(self._pow(gen, order // l, tail) != one for l in _prime_divisors(order)):
                break
        else:  # pragma: no cover
            raise AssertionError("no primitive polynomial")
        self.exp = self._powers(gen, tail)
        self.log = {code: k for k, code in enumerate(self.exp)}

    def _mul(self, a, b, tail):
        p, n = self.p, self.n
        prod_ = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_[i + j] = (prod_[i + j] + x * y) % p
        # x^n = -(tail[0] + tail[1] x + ...)
        for k in range(2 * n - 2, n - 1, -1):
            top = prod_[k]
            if top:
                for i, t in enumerate(tail):
                    prod_[k - n + i] = (prod_[k - n + i] - top * t) % p
        return prod_[:n]

    def _pow(self, a, e, tail):
        out = [1] + [0] * (self.n - 1)
        while e:
            if e & 1:
                out = self._mul(out, a, tail)
            a = self._mul(a, a, tail)
            e >>= 1
        return out

    def _code(self, a) -> int:
        code = 0
        for c in reversed(a):
            code = code * self.p + c
        return code

    def _powers(self, gen, tail) -> list[int]:
        cur = [1] + [0] * (self.n - 1)
        out = []
        p, n = self.p, self.n
        for _ in range(self.size - 1):
            out.append(self._code(cur))
            if n == 1:
                cur = [cur[0] * gen[0] % p]
            else:
                # multiply by x: shift, then fold x^n back in
                top = cur[-1]
                cur = [(c - top * t) % p for c, t in zip([0] + cur[:-1], tail)]
        return out

    def add(self, a: int, b: int) -> int:
        p = self.p
        out, place = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.size - 1)]

    def power(self, a: int, k: int) -> int:
        if a == 0:
            return 0
        return self.exp[(self.log[a] * k) % (self.size - 1)]


@lru_cache(maxsize=64)
def _field(p: int, n: int) -> _LogField:
    return _LogField(p, n)


def _embed(big: _LogField, coeffs: Sequence[int], modulus: Sequence[int] | None) -> int:
    coeffs = [int(c) % big.p for c in coeffs]
    if modulus is None or len(modulus) <= 2:
        return coeffs[0] if coeffs else 0
    # image of the formal generator: any root of the small modulus
    for w in big.exp:
        acc = 0
        for c in reversed(modulus):
            acc = big.add(big.mul(acc, w), int(c) % big.p)
        if acc == 0:
            break
    else:  # pragma: no cover
        raise AssertionError("small field does not embed")
    out, wk = 0, 1
    for c in coeffs:
        out = big.add(out, big.mul(c, wk) if c else 0)
        wk = big.mul(wk, w)
    return out


def root_degrees_by_search(p: int, s: int, c, m: int, modulus=None, guard: int = FIELD_GUARD) -> tuple[int, ...]:
    """Degrees over GF(p^s) of the distinct roots of ``X^m - c``, found by scanning GF(p^(s*d)).

    ``c`` is an integer or a coefficient sequence in the formal generator of
    GF(p^s) (whose modulus must then be passed).
    """
    coeffs = [c] if isinstance(c, int) else list(c)
    if not any(x % p for x in coeffs):
        raise ValueError("c must be nonzero")
    distinct = m
    while distinct % p == 0:
        distinct //= p
    q = p**s
    found: list[int] = []
    d = 0
    while len(found) < distinct:
        d += 1
        if d > m:  # pragma: no cover
            raise AssertionError("roots missing")
        if p ** (s * d) > guard:
            raise GuardExceeded(f"GF({p}^{s * d}) exceeds the search guard")
        big = _field(p, s * d)
        target = _embed(big, coeffs, modulus)
        order = big.size - 1
        exact = 0
        for alpha in big.exp:
            if big.power(alpha, m) != target:
                continue
            k = big.log[alpha]
            # least d' with alpha in GF(q^d')
            least = next(dd for dd in range(1, d + 1) if d % dd == 0 and k * (q**dd - 1) % order == 0)
            if least == d:
                exact += 1
        found += [d] * exact
    return tuple(sorted(found))
