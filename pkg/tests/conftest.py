import pytest
from hypothesis import settings

settings.register_profile("sincconv", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("sincconv")


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def record_criterion(request):
    """Collect one PASS/FAIL line per acceptance criterion for the terminal summary."""
    lines = request.config._acceptance_lines

    def record(number, title, ok, detail=""):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}  [{detail}]"
        lines.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
