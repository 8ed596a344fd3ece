import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    """Record one PASS/FAIL line for the terminal summary and echo it."""
    def record(num, name, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {num:>2} {name}: {detail}"
        ACCEPTANCE_LINES.append((num, line))
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
