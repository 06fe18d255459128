import sys
from pathlib import Path

from hypothesis import settings

HERE = Path(__file__).parent
FIXTURES = HERE / "fixtures"
sys.path.insert(0, str(HERE))  # lets test modules import the oracles

settings.register_profile("repo", deadline=None, derandomize=True, max_examples=200)
settings.load_profile("repo")

ACCEPTANCE: list[str] = []  # one PASS/FAIL line per acceptance criterion


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
