import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from scurve.census import build_census  # noqa: E402

TREFOIL = "a+ b- c+ a+ b- c+"
TORUS25 = "a+ b- c+ d- e+ a+ b- c+ d- e+"


@pytest.fixture(scope="session")
def census6():
    return build_census(6)


@pytest.fixture(scope="session")
def census_codes(census6):
    return [code for _, code in census6.curves()]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
