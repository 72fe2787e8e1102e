from pathlib import Path

import pytest

from mvconn import boolean, builtin_pair, chain, UNIT

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture(scope="session")
def bool3():
    return boolean(3)


@pytest.fixture(scope="session")
def bool2():
    return boolean(2)


@pytest.fixture(scope="session")
def c11():
    return chain(11)


@pytest.fixture(scope="session")
def c5():
    return chain(5)


@pytest.fixture(scope="session")
def unit():
    return UNIT


@pytest.fixture(scope="session")
def luk_unit():
    return builtin_pair("lukasiewicz", UNIT)


@pytest.fixture(scope="session")
def prod_unit():
    return builtin_pair("product", UNIT)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
