import pytest
from hypothesis import settings

from hodgetrees import fixtures
from hodgetrees.random_complexes import CorpusConfig, corpus

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def random_corpus():
    return corpus(CorpusConfig())


@pytest.fixture
def triangle():
    return fixtures.triangle_graph()


@pytest.fixture
def loop2():
    return fixtures.doubled_loop()


@pytest.fixture
def disc():
    return fixtures.disc()


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
