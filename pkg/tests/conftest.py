from __future__ import annotations

import pytest

from lapcert.families import enumerate_graphs, generate_family, parse_family


def fam(text: str):
    return generate_family(parse_family(text))


@pytest.fixture(scope="session")
def small_corpus():
    """Every connected graph on 2..6 vertices."""
    return [g for n in range(2, 7) for g in enumerate_graphs(n)]


# one line per acceptance criterion, echoed at the end of the pytest run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
