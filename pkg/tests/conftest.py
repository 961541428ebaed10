import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

# larger instances are opt-in
FULL = os.environ.get("GENLAB_FULL") == "1"

slow = pytest.mark.skipif(not FULL, reason="set GENLAB_FULL=1 to run larger instances")

CRITERIA_LINES: list[str] = []


def record_criterion(num, title, ok):
    line = f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}"
    CRITERIA_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
