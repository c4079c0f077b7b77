import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from truthbench.semantics import FiniteStructure  # noqa: E402
from truthbench.truth import TruthTower  # noqa: E402

# (criterion, title, verdict, seconds, limit) rows filled in by test_acceptance
ACCEPTANCE = []


@pytest.fixture(scope="session")
def v4():
    return FiniteStructure.rank_cap(4)


@pytest.fixture(scope="session")
def tower6():
    return TruthTower.build("rank:4", 6)


@pytest.fixture(scope="session")
def tower30():
    return TruthTower.build("rank:4", 30)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, verdict, seconds, limit in sorted(ACCEPTANCE):
        budget = f" (limit {limit:.0f}s)" if limit else ""
        terminalreporter.write_line(f"criterion {n:2}: {verdict}  {title}  {seconds:.1f}s{budget}")
