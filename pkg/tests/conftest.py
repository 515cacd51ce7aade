import pytest

ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE:
        terminalreporter.write_line(line)


@pytest.fixture
def record():
    def _record(number, description, passed):
        ACCEPTANCE.append(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {description}")
        assert passed, description

    return _record
