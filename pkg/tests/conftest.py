import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

# lines recorded by the acceptance suite, repeated in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
