"""Shared fixtures plus the acceptance summary printer.

The acceptance tests record one verdict per criterion; the terminal
summary prints them as single pass/fail lines even though pytest captures
stdout during the tests themselves.
"""

CRITERIA = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    CRITERIA[number] = (passed, detail)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        passed, detail = CRITERIA[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict} - {detail}")
