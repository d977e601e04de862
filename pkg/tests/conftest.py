from types import SimpleNamespace

import pytest

from monochar import corpus
from monochar.monoid import find_element

# filled by test_acceptance, printed at the end of the run
CRITERIA: dict[str, str] = {}


@pytest.fixture(scope="session")
def t2():
    """T_2 with its elements by name: id, swap, c0, c1 (constant maps)."""
    M = corpus.t2()
    return SimpleNamespace(
        M=M,
        id=find_element(M, (0, 1)),
        swap=find_element(M, (1, 0)),
        c0=find_element(M, (0, 0)),
        c1=find_element(M, (1, 1)),
    )


@pytest.fixture(scope="session")
def T3():
    return corpus.full_transformation_monoid(3)


@pytest.fixture(scope="session")
def monoids():
    return corpus.monoid_corpus()


@pytest.fixture(scope="session")
def fields():
    return corpus.standard_fields()


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(CRITERIA.items(), key=lambda kv: int(kv[0].split()[0])):
            terminalreporter.write_line(f"{verdict} criterion {name}")
