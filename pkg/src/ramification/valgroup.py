"""Finitely generated subgroups of Q^n (value groups).

A lattice is stored as ``(1/D) * H`` where ``H`` is the row-style Hermite
normal form of an integer matrix and ``D`` is the least positive integer
making the lattice integral.  Two generating sets of the same subgroup give
bit-identical ``ValueLattice`` objects, so ``==`` is subgroup equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionError, NotSubgroup, RankError

Vector = tuple  # tuple of Fraction


def _as_vector(v: Iterable, n: int | None = None) -> tuple[Fraction, ...]:
    out = tuple(Fraction(x) for x in v)
    if n is not None and len(out) != n:
        raise DimensionError(f"expected a vector of length {n}, got {len(out)}")
    return out


# -- integer normal forms -------------------------------------------------


def hermite_rows(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    Returns the nonzero rows in echelon form: pivots strictly move right,
    every pivot is positive and entries above a pivot lie in ``[0, pivot)``.
    """
    a = [list(map(int, r)) for r in rows]
    out: list[list[int]] = []
    for col in range(ncols):
        live = [r for r in a if r[col] != 0]
        if not live:
            continue
        rest = [r for r in a if r[col] == 0]
        # gcd-reduce the column down to a single row
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = []
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                else:
                    rest.append(r)
            live = [piv] + nxt
        piv = live[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        for i, r in enumerate(out):
            q = r[col] // piv[col]
            if q:
                out[i] = [x - q * y for x, y in zip(r, piv)]
        out.append(piv)
        a = [r for r in rest if any(r)]
    return out


def hermite_with_transform(
    rows: Sequence[Sequence[int]], ncols: int
) -> tuple[list[list[int]], list[list[int]]]:
    """Echelon form ``E = U @ A`` with ``U`` unimodular; zero rows kept last.

    The rows of ``U`` matching zero rows of ``E`` span the left integer
    kernel of ``A``.
    """
    m = len(rows)
    aug = [list(map(int, r)) + [int(i == j) for j in range(m)] for i, r in enumerate(rows)]
    top = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(top, m) if aug[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(aug[i][col]))
            aug[top], aug[i0] = aug[i0], aug[top]
            done = True
            for i in range(top + 1, m):
                if aug[i][col]:
                    q = aug[i][col] // aug[top][col]
                    aug[i] = [x - q * y for x, y in zip(aug[i], aug[top])]
                    if aug[i][col]:
                        done = False
            if done:
                top += 1
                break
        if top == m:
            break
    return [r[:ncols] for r in aug], [r[ncols:] for r in aug]


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Canonical (Hermite) basis of ``{x in Z^m : x @ A = 0}``."""
    m = len(rows)
    ech, u = hermite_with_transform(rows, ncols)
    kern = [u[i] for i in range(m) if not any(ech[i])]
    return hermite_rows(kern, m)


def smith_diagonal(mat: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors ``d1 | d2 | ...`` of an integer matrix."""
    a = [list(map(int, r)) for r in mat]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    diag = []
    t = 0
    while t < min(nr, nc):
        cells = [(abs(a[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not cells:
            break
        _, i0, j0 = min(cells)
        a[t], a[i0] = a[i0], a[t]
        for r in a:
            r[t], r[j0] = r[j0], r[t]
        while True:
            piv = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = a[i][t] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = a[t][j] // piv
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the remaining block
                bad = next(
                    (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % piv),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            cells = [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
            cells += [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
            _, i0, j0 = min(cells)
            a[t], a[i0] = a[i0], a[t]
            for r in a:
                r[t], r[j0] = r[j0], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


# -- the lattice type -----------------------------------------------------


@dataclass(frozen=True)
class ValueLattice:
    """Full-rank subgroup of Q^n in canonical Hermite form."""

    ambient_dim: int
    basis: tuple[tuple[Fraction, ...], ...]
    denominator: int

    @property
    def integer_basis(self) -> tuple[tuple[int, ...], ...]:
        d = self.denominator
        return tuple(tuple(int(x * d) for x in row) for row in self.basis)

    @property
    def covolume(self) -> Fraction:
        out = Fraction(1)
        for i, row in enumerate(self.basis):
            out *= row[i]
        return out

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __add__(self, other: "ValueLattice") -> "ValueLattice":
        return lattice_sum(self, other)

    def scaled(self, k: int) -> "ValueLattice":
        return canonical_basis(self.ambient_dim, [[k * x for x in row] for row in self.basis])

    def format(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.integer_basis)
        return f"1/{self.denominator} [{rows}]"

    __str__ = format


def canonical_basis(ambient_dim: int, generators: Iterable[Iterable]) -> ValueLattice:
    """Canonical lattice spanned by ``generators`` (rational n-vectors)."""
    if ambient_dim < 1:
        raise DimensionError("ambient dimension must be positive")
    gens = [_as_vector(g, ambient_dim) for g in generators]
    den = 1
    for g in gens:
        for x in g:
            den = lcm(den, x.denominator)
    h = hermite_rows([[int(x * den) for x in g] for g in gens], ambient_dim)
    if len(h) < ambient_dim:
        raise RankError(f"generators span rank {len(h)} < {ambient_dim}")
    basis = tuple(tuple(Fraction(x, den) for x in row) for row in h)
    dmin = 1
    for row in basis:
        for x in row:
            dmin = lcm(dmin, x.denominator)
    return ValueLattice(ambient_dim, basis, dmin)


def standard_lattice(n: int) -> ValueLattice:
    return canonical_basis(n, [[int(i == j) for j in range(n)] for i in range(n)])


def _coordinates(lat: ValueLattice, v: Sequence[Fraction]) -> list[Fraction] | None:
    # back-substitution against the upper triangular basis
    x: list[Fraction] = []
    for j in range(lat.ambient_dim):
        acc = v[j] - sum((x[i] * lat.basis[i][j] for i in range(j)), Fraction(0))
        x.append(acc / lat.basis[j][j])
    return x


def contains(lat: ValueLattice, v: Iterable) -> bool:
    """True iff ``v`` is an integer combination of the basis rows."""
    vec = _as_vector(v, lat.ambient_dim)
    return all(c.denominator == 1 for c in _coordinates(lat, vec))


def _check_dims(a: ValueLattice, b: ValueLattice) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")


def is_sublattice(sub: ValueLattice, sup: ValueLattice) -> bool:
    _check_dims(sub, sup)
    return all(contains(sup, row) for row in sub.basis)


def _require_sub(sub: ValueLattice, sup: ValueLattice) -> None:
    if not is_sublattice(sub, sup):
        raise NotSubgroup(f"{sub} is not contained in {sup}")


def index(sub: ValueLattice, sup: ValueLattice) -> int:
    """Group index ``[sup : sub]``."""
    _require_sub(sub, sup)
    q = sub.covolume / sup.covolume
    assert q.denominator == 1
    return abs(q.numerator)


def lattice_sum(a: ValueLattice, b: ValueLattice) -> ValueLattice:
    _check_dims(a, b)
    return canonical_basis(a.ambient_dim, list(a.basis) + list(b.basis))


def quotient_invariants(sub: ValueLattice, sup: ValueLattice) -> list[int]:
    """Invariant factors (all > 1, each dividing the next) of ``sup / sub``."""
    _require_sub(sub, sup)
    coords = [_coordinates(sup, row) for row in sub.basis]
    mat = [[int(c) for c in row] for row in coords]
    return [d for d in smith_diagonal(mat) if d != 1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_to_p_part(sub: ValueLattice, sup: ValueLattice, p: int) -> ValueLattice:
    """Intermediate lattice ``M`` with ``M / sub`` the prime-to-p part of ``sup / sub``.

    ``p = 1`` stands for residue characteristic zero and returns ``sup``.
    """
    if p != 1 and not is_prime(p):
        raise ValueError(f"p must be 1 or a prime, got {p}")
    inv = quotient_invariants(sub, sup)
    if p == 1:
        return sup
    exponent = inv[-1] if inv else 1
    pa = 1
    while exponent % p == 0:
        exponent //= p
        pa *= p
    # in a finite abelian group of exponent p^a * m the p'-part is p^a * G
    return lattice_sum(sub, sup.scaled(pa))

