"""Echo the acceptance criterion verdicts after the run summary."""

import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for name, module in sys.modules.items():
        if name.endswith("test_acceptance"):
            lines = getattr(module, "REPORT_LINES", [])
            break
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
