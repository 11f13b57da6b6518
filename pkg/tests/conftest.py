import pytest

from l2zeta.fixtures import NAMES, load_fixture

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


@pytest.fixture(scope="session")
def graphs():
    return {name: load_fixture(name) for name in NAMES}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
