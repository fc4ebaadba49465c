import pytest
from hypothesis import settings
from hypothesis import strategies as st

from diag12.modring import make_ring
from diag12.polyring import Polynomial, monomials_up_to

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def polynomials(draw, n, m, max_degree=3, max_terms=6):
    ring = make_ring(n)
    monos = monomials_up_to(m, max_degree)
    chosen = draw(st.lists(st.sampled_from(monos), max_size=max_terms, unique=True))
    terms = {mono: draw(st.integers(0, n - 1)) for mono in chosen}
    return Polynomial(ring, m, terms)


@st.composite
def poly_triples(draw, max_n=24, max_m=3):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    strat = polynomials(n, m)
    return draw(strat), draw(strat), draw(strat)


@st.composite
def nilpotent_polynomials(draw, n, m, max_degree=3):
    """Random polynomial whose coefficients are all multiples of the radical."""
    ring = make_ring(n)
    f = draw(polynomials(n, m, max_degree))
    return f.scale(ring.radical)
