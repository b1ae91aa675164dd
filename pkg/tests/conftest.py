import pytest


@pytest.fixture(scope="session")
def cs_cache():
    """One shared memo table for the sphere/ball recursion per test run."""
    return {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # the acceptance module records one line per criterion; echo them after
    # the run so the verdicts are visible without digging through -v output
    try:
        from test_acceptance import CRITERIA_RESULTS
    except ImportError:
        return
    if not CRITERIA_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in CRITERIA_RESULTS:
        terminalreporter.write_line(line)
