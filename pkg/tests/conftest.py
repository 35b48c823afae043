import pytest

from addext.field_tower import default_tower

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def f4():
    """F_2 < F_2 < F_4 with w^2 = w + 1; w is encoded as 2, w^2 as 3."""
    return default_tower(2, 1, 2)


@pytest.fixture(scope="session")
def f16():
    return default_tower(2, 1, 4)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
