from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from ramification.residue import field_make
from ramification.tower import BaseField, RadicalGenerator, Tower
from ramification.valgroup import canonical_basis

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def fractions(max_den=12, max_num=12):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


@st.composite
def lattices(draw, n=None, max_den=12, extra=2):
    """Z^n plus up to ``extra`` random rational vectors."""
    n = n or draw(st.integers(1, 3))
    gens = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, extra))):
        gens.append(draw(st.lists(fractions(max_den), min_size=n, max_size=n)))
    return canonical_basis(n, gens)


@st.composite
def lattice_chains(draw, max_den=12):
    """``(A, B)`` with ``A`` inside ``B``."""
    n = draw(st.integers(1, 3))
    b = draw(lattices(n=n, max_den=max_den))
    k = draw(st.integers(1, 3))
    a = canonical_basis(n, [[k * x for x in row] for row in b.basis] + [list(draw(st.sampled_from(b.basis)))])
    return a, b


def base_field(p, n):
    k = field_make("Q") if p == 1 else field_make((p, 1))
    return BaseField(k, ("t",) if n == 1 else ("X", "Y"))


@st.composite
def towers(draw, p=None, n=None, orders=(1, 2, 3, 4, 5, 6), tame=False, base=None, max_gens=2):
    if base is None:
        p = p if p is not None else draw(st.sampled_from([1, 3, 5, 7]))
        n = n or draw(st.integers(1, 2))
        base = base_field(p, n)
    p = base.p
    allowed = [r for r in orders if not tame or p == 1 or r % p]
    gens = []
    for i in range(draw(st.integers(0, max_gens))):
        c = 1 if p == 1 else draw(st.integers(1, p - 1))
        exps = tuple(draw(st.lists(st.integers(-2, 2), min_size=base.n, max_size=base.n)))
        gens.append(RadicalGenerator(f"g{i + 1}", base.residue(c), exps, draw(st.sampled_from(allowed))))
    return Tower(base, tuple(gens))


@st.composite
def tower_pairs(draw, tame_first=True):
    p = draw(st.sampled_from([1, 3, 5, 7]))
    base = base_field(p, draw(st.integers(1, 2)))
    return draw(towers(base=base, tame=tame_first)), draw(towers(base=base))


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
