import pytest

_ACCEPTANCE: list[str] = []


@pytest.fixture
def record(request):
    """Log one PASS/FAIL line for an acceptance criterion."""
    def _record(criterion: str, passed: bool, note: str = ""):
        status = "PASS" if passed else "FAIL"
        _ACCEPTANCE.append(f"[{status}] {criterion}" + (f" ({note})" if note else ""))
        return passed
    return _record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE:
            terminalreporter.write_line(line)
