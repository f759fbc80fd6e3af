import pytest

from sbk.catalog import algebra
from sbk.sampling import make_rng

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def osp22():
    return algebra("osp22")


@pytest.fixture(scope="session")
def osp12():
    return algebra("osp12_u1")


@pytest.fixture
def rng():
    return make_rng(20261016)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
