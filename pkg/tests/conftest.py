import pytest

from sncentral import MemoCache


@pytest.fixture
def cache() -> MemoCache:
    return MemoCache()


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_RESULTS as RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
