"""Randomized scenario sweep for the unramifiedness criterion.

Each sampled scenario is a pair ``(t1, t2)`` of radical towers over
``k(X_1..X_n)`` with ``t1`` tame.  For every scenario with unambiguous
residue data the sweep asserts

* the criterion agrees with the direct computation of ``e(L/L2)``;
* an unramified compositum forces ``e1 | e2`` and ``e(L/K) = lcm(e1, e2)``;
* the tame part has the prime-to-p value group;
* when the criterion holds, the witness unit attains ``d_max`` and ``e1 | e2'``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .abhyankar import TheoremVerdict, compositum, tame_part, theorem_check
from .errors import GuardExceeded
from .parser import parse_tower
from .ramify import residue_degree_over, value_group
from .residue import field_make
from .selfcheck import check_tower_pair
from .tower import BaseField, RadicalGenerator, Tower
from .valgroup import is_prime, prime_to_p_part, standard_lattice

MAX_SCENARIOS = 100_000
MAX_ORDER = 64
MAX_EXPONENT = 16
MAX_GENERATORS = 4
MAX_DIM = 3

VARIABLES = {1: ("t",), 2: ("X", "Y"), 3: ("X", "Y", "Z")}


@dataclass(frozen=True)
class SweepParams:
    primes: tuple[int, ...] = (1, 3, 5, 7)
    orders: tuple[int, ...] = (1, 2, 3, 4, 5, 6)
    exponents: tuple[int, ...] = (-2, -1, 0, 1, 2)
    dims: tuple[int, ...] = (1, 2)
    max_generators: int = 2
    count: int = 200
    seed: int = 0

    def validate(self) -> None:
        if self.count > MAX_SCENARIOS:
            raise GuardExceeded(f"at most {MAX_SCENARIOS} scenarios")
        if any(p != 1 and not is_prime(p) for p in self.primes):
            raise ValueError("residue characteristics must be primes or 1 (for Q)")
        if any(r < 1 or r > MAX_ORDER for r in self.orders):
            raise GuardExceeded(f"root orders must lie in 1..{MAX_ORDER}")
        if any(abs(a) > MAX_EXPONENT for a in self.exponents):
            raise GuardExceeded(f"exponents must lie in -{MAX_EXPONENT}..{MAX_EXPONENT}")
        if any(n < 1 or n > MAX_DIM for n in self.dims):
            raise GuardExceeded(f"dimensions must lie in 1..{MAX_DIM}")
        if not 1 <= self.max_generators <= MAX_GENERATORS:
            raise GuardExceeded(f"between 1 and {MAX_GENERATORS} generators per tower")


@dataclass(frozen=True)
class SweepCase:
    t1: Tower
    t2: Tower

    @property
    def key(self) -> str:
        b = self.t1.base
        fmt = lambda t: "[" + ", ".join(g.format(b.variables) for g in t.generators) + "]"  # noqa: E731
        return f"{b} t1={fmt(self.t1)} t2={fmt(self.t2)}"


@dataclass
class SweepSummary:
    total: int = 0
    agreements: int = 0
    skipped_ambiguous: int = 0
    unramified: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def disagreements(self) -> int:
        return len(self.failures)

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "agreements": self.agreements,
            "skipped": self.skipped_ambiguous,
            "unramified": self.unramified,
            "disagreements": self.disagreements,
        }


def _random_tower(rng: random.Random, base: BaseField, orders, exponents, k: int) -> Tower:
    p = base.p
    gens = []
    for i in range(rng.randint(1, k)):
        c = 1 if p == 1 else rng.randrange(1, p)
        exps = tuple(rng.choice(exponents) for _ in range(base.n))
        gens.append(RadicalGenerator(f"g{i + 1}", base.residue(c), exps, rng.choice(orders)))
    return Tower(base, tuple(gens))


def generate(params: SweepParams) -> list[SweepCase]:
    """Deterministic sample of scenarios; empty if any range is empty."""
    params.validate()
    if not (params.primes and params.orders and params.exponents and params.dims):
        return []
    rng = random.Random(params.seed)
    cases = []
    attempts = 0
    while len(cases) < params.count and attempts < 50 * params.count:
        attempts += 1
        p = rng.choice(params.primes)
        tame_orders = [r for r in params.orders if p == 1 or r % p]
        if not tame_orders:
            continue
        residue = field_make("Q") if p == 1 else field_make((p, 1))
        base = BaseField(residue, VARIABLES[rng.choice(params.dims)])
        t1 = _random_tower(rng, base, tame_orders, params.exponents, params.max_generators)
        t2 = _random_tower(rng, base, params.orders, params.exponents, params.max_generators)
        cases.append(SweepCase(t1, t2))
    return cases


def check_case(case: SweepCase) -> tuple[str, TheoremVerdict | None, str]:
    """``("skip"|"ok"|"fail", verdict, reason)``."""
    t1, t2 = case.t1, case.t2
    v = theorem_check(t1, t2)
    zn = standard_lattice(t1.base.n)
    if value_group(tame_part(t2)) != prime_to_p_part(zn, value_group(t2), t1.p):
        return "fail", v, "tame part value group differs from the prime-to-p part"
    if v.undetermined:
        return "skip", v, "ambiguous residue data"
    if v.condition_holds != v.direct_unramified:
        return "fail", v, f"condition={v.condition_holds} but direct={v.direct_unramified}"
    if v.direct_unramified and not (v.divisibility_e1_e2 and v.lcm_holds):
        return "fail", v, "unramified compositum without e1 | e2 and lcm"
    if v.condition_holds:
        if v.witness_theta is None:
            return "fail", v, "no witness unit attains d_max"
        lp = compositum(t1, tame_part(t2))
        if residue_degree_over(lp, t1, v.witness_theta) != v.d_max:
            return "fail", v, "witness degree differs from d_max"
        if v.e2_prime % v.e1:
            return "fail", v, "e1 does not divide e2'"
    return "ok", v, ""


def run_sweep(cases: list[SweepCase], self_check: bool = False) -> SweepSummary:
    summary = SweepSummary()
    for case in sorted(cases, key=lambda c: c.key):
        summary.total += 1
        status, v, reason = check_case(case)
        if self_check and status != "fail":
            check_tower_pair(compositum(case.t1, case.t2), case.t2)
        if status == "skip":
            summary.skipped_ambiguous += 1
        elif status == "fail":
            summary.failures.append((case.key, reason))
        else:
            summary.agreements += 1
            summary.unramified += v.direct_unramified
    return summary


def worked_examples() -> list[tuple[str, SweepCase]]:
    """The four worked examples of the criterion."""
    q = field_make("Q")
    xy = BaseField(q, ("X", "Y"))
    f3 = BaseField(field_make((3, 1)), ("t",))
    f7 = BaseField(field_make((7, 1)), ("t",))
    specs = [
        ("sqrt_x_sqrt_y", xy, ["sqrt(X)"], ["sqrt(Y)"]),
        ("sqrt_x_cbrt_y", xy, ["sqrt(X)"], ["root(3, Y)"]),
        ("f3_tame", f3, ["sqrt(t)"], ["root(4, 2*t)"]),
        ("f7_sqrt_minus_t", f7, ["sqrt(t)"], ["sqrt(-t)"]),
    ]
    return [(name, SweepCase(parse_tower(b, a), parse_tower(b, c))) for name, b, a, c in specs]

