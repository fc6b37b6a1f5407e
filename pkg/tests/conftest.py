import pytest

from firefighter.propagation import STEP_AUDIT

# criterion id -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    tr = terminalreporter
    key = "5 steps <= burned"
    if key in ACCEPTANCE:
        ACCEPTANCE[key] = (not STEP_AUDIT.violations,
                           f"{STEP_AUDIT.runs} simulations in the whole run, "
                           f"{len(STEP_AUDIT.violations)} violations")
    if ACCEPTANCE:
        tr.section("acceptance criteria")
        for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
            ok, detail = ACCEPTANCE[key]
            tr.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {detail}")
    tr.write_line(f"step audit: {STEP_AUDIT.runs} simulations, "
                  f"{len(STEP_AUDIT.violations)} with more steps than burned vertices")


def pytest_sessionfinish(session, exitstatus):
    if STEP_AUDIT.violations:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED
