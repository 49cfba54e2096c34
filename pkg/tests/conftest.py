import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# (number, title, passed, seconds, budget, detail) filled by test_acceptance
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds, budget, detail in sorted(ACCEPTANCE_RESULTS):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"[{verdict}] criterion {number}: {title} ({seconds:.2f}s / {budget}s) {detail}".rstrip()
        )
