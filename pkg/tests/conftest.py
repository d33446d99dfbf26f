"""Shared fixtures and the acceptance-summary terminal hook."""

import pytest

from colorkernels import t5_star, t_star


@pytest.fixture(scope="session")
def t5():
    return t5_star()


@pytest.fixture(scope="session")
def t6_star():
    return t_star(6)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion, when they ran."""
    import sys

    module = next(
        (m for name, m in sys.modules.items() if name.endswith("test_acceptance")),
        None,
    )
    lines = getattr(module, "RESULTS", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
