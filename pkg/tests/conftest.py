import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def record_acceptance():
    """Record one PASS/FAIL line for the terminal summary, then assert."""

    def record(number: int, ok: bool, detail: str):
        line = f"acceptance {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
