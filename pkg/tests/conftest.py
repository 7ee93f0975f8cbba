import pytest

from hyperlab.hyperstructure import paper_24, validated, zmod
from hyperlab.intervals import iv_new
from hyperlab.ivfuzzy import IVFuzzySet


def iv(lo, hi=None):
    return iv_new(lo, lo if hi is None else hi)


@pytest.fixture(scope="session")
def R24():
    return validated(paper_24())


@pytest.fixture(scope="session")
def Z4():
    return validated(zmod(4, 2, 4))


@pytest.fixture(scope="session")
def example_set():
    return IVFuzzySet((iv("4/5", "9/10"), iv("4/5", "9/10"), iv("7/10", "4/5"), iv("3/5", "7/10")))


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
