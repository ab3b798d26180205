from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from expcurve.arith import BivariatePolynomial, UPoly

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_fractions = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))


@st.composite
def bivariate(draw, max_deg: int = 4, max_terms: int = 6, nonzero: bool = False):
    """Sparse polynomial in x, y with small rational coefficients."""
    mono = st.tuples(st.integers(0, max_deg), st.integers(0, max_deg)).filter(lambda m: sum(m) <= max_deg)
    terms = draw(st.dictionaries(mono, small_fractions.filter(bool), min_size=1 if nonzero else 0, max_size=max_terms))
    return BivariatePolynomial(terms)


@st.composite
def upoly(draw, max_deg: int = 4, nonconstant: bool = False):
    lo = 1 if nonconstant else 0
    d = draw(st.integers(lo, max_deg))
    cs = draw(st.lists(small_fractions, min_size=d + 1, max_size=d + 1))
    if not cs[-1]:
        cs[-1] = Fraction(1)
    return UPoly(cs)


# -- acceptance report ------------------------------------------------------------

import pytest  # noqa: E402

ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one status line per acceptance criterion for the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE, {})

    def record(number: int, ok: bool, detail: str):
        lines[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
