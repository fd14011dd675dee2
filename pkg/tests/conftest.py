import pytest

# filled by test_acceptance; one (number, ok, message) per criterion
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, message in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {message}")


@pytest.fixture
def acceptance_lines():
    return ACCEPTANCE_LINES
