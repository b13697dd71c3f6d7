import pytest

from hallmass import _kernel

ACCEPTANCE_LINES = []


@pytest.fixture(params=_kernel.available_backends())
def backend(request):
    """Run the test once per available kernel backend."""
    prev = _kernel.set_backend(request.param)
    yield request.param
    _kernel.set_backend(prev)


@pytest.fixture
def record_criterion():
    def record(number, title, passed, detail=""):
        line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
