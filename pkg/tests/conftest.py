from fractions import Fraction

import pytest
from hypothesis import strategies as st

from knodelwalk.series import PowerSeries
from knodelwalk.walk import WalkParams

ALPHAS = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)]
ALPHAS_WIDE = ALPHAS + [Fraction(1, 7), Fraction(9, 10)]


@pytest.fixture(params=ALPHAS, ids=str)
def params(request):
    return WalkParams(request.param)


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)

# rational alpha strictly inside (0, 1)
alphas = st.builds(
    lambda q, p: Fraction(p % (q - 1) + 1, q),
    st.integers(min_value=2, max_value=13),
    st.integers(min_value=0, max_value=100),
)


@st.composite
def series(draw, order=32, unit=False, const=None, zero_const=False):
    cs = draw(st.lists(small_rationals, min_size=order + 1, max_size=order + 1))
    if const is not None:
        cs[0] = Fraction(const)
    elif zero_const:
        cs[0] = Fraction(0)
    elif unit and cs[0] == 0:
        cs[0] = Fraction(1)
    return PowerSeries(cs)


def binomial_series(exponent: Fraction, order: int, sign: int = -1):
    """Coefficients of (1 + sign*z)^exponent by the generalized binomial theorem."""
    out = [Fraction(1)]
    c = Fraction(1)
    for n in range(1, order + 1):
        c = c * (exponent - n + 1) / n
        out.append(c * sign**n)
    return PowerSeries(out)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
