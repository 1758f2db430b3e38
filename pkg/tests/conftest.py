"""Shared fixtures and the acceptance-summary hook."""
from __future__ import annotations

import re

import pytest

from charzero.caps import Caps


@pytest.fixture(scope="session")
def caps() -> Caps:
    return Caps()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One explicit pass/fail line per acceptance criterion."""
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", nodeid)
            if m:
                label = "PASS" if status == "passed" else "FAIL"
                name = nodeid.split("::")[-1]
                lines.append((int(m.group(1)), f"{label} {name}"))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for _, line in sorted(set(lines)):
            terminalreporter.write_line(line)
