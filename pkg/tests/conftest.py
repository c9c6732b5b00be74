from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hilbfock.frobenius import reference_algebra

ALGEBRAS = ("point", "p2", "torus_like")


@pytest.fixture(scope="session", params=ALGEBRAS)
def algebra(request):
    return reference_algebra(request.param)


@pytest.fixture(scope="session")
def point():
    return reference_algebra("point")


@pytest.fixture(scope="session")
def p2():
    return reference_algebra("p2")


@pytest.fixture(scope="session")
def torus():
    return reference_algebra("torus_like")


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda x: x != 0)


def elements(H, scalars=rationals):
    return st.lists(scalars, min_size=H.dim, max_size=H.dim).map(H.elem)


def even_elements(H, scalars=rationals):
    def build(cs):
        return H.elem([c if not H.parity[i] else Fraction(0) for i, c in enumerate(cs)])
    return st.lists(scalars, min_size=H.dim, max_size=H.dim).map(build)


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
