import pytest


@pytest.fixture
def square_flags():
    from gcomplete.flagops import FlagVector

    return FlagVector.from_dict(2, {(): 1, (0,): 4, (1,): 4, (0, 1): 8})


@pytest.fixture
def pentagon_flags():
    from gcomplete.flagops import FlagVector

    return FlagVector.from_dict(2, {(): 1, (0,): 5, (1,): 5, (0, 1): 10})


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.verdict_lines():
        terminalreporter.write_line(line)
