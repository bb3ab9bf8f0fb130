from fractions import Fraction

import pytest
from hypothesis import strategies as st

from parity_lab.poly import UniPoly

z = UniPoly.z()


def P(*coeffs):
    """Polynomial from ascending coefficients."""
    return UniPoly.from_coeffs(coeffs)


small_rationals = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4)
)


@st.composite
def polys(draw, max_degree=4, coeffs=small_rationals):
    cs = draw(st.lists(coeffs, min_size=0, max_size=max_degree + 1))
    return UniPoly.from_coeffs(cs)


@st.composite
def odd_polys(draw, max_degree=7, nonzero=True):
    terms = {e: draw(small_rationals) for e in range(1, max_degree + 1, 2)}
    p = UniPoly(terms)
    if nonzero and p.is_zero():
        p = UniPoly.z()
    return p


def rank(rows):
    """Rank of a list of rational vectors by Gaussian elimination."""
    rows = [list(map(Fraction, r)) for r in rows]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


@pytest.fixture
def zpoly():
    return z


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
