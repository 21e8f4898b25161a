import pytest

from lagmat.matfile import figure
from lagmat.represent import extract_bases


@pytest.fixture(scope="session")
def reps():
    return {name: figure(name) for name in ("fig1", "fig2_gf2", "fig3_left", "fig3_right", "lsquare", "hyperbolic")}


@pytest.fixture(scope="session")
def mats(reps):
    return {name: extract_bases(r) for name, r in reps.items()}


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
