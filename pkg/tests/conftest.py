import pytest

# criterion number -> (passed, title, detail); filled by test_acceptance
REPORT = {}


@pytest.fixture(scope="session")
def report():
    return REPORT


def pytest_terminal_summary(terminalreporter):
    if not REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(REPORT):
        ok, title, detail = REPORT[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {num:>2}. {title}: {detail}")
