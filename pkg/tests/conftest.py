import pytest

from hirzscroll.divisors import Surface


@pytest.fixture(params=[0, 1, 2, 3], ids=lambda e: f"F{e}")
def surface(request):
    return Surface(request.param)


ACCEPTANCE_LINES: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=int):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
