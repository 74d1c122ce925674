import math

import pytest

from fracschrod import kernels
from fracschrod.params import PhysicalParams


@pytest.fixture
def natural():
    return PhysicalParams()


@pytest.fixture
def osc_rest():
    """Natural units with B = m/sqrt8, so mu = sqrt2 under the default convention."""
    return PhysicalParams(B=1.0 / math.sqrt(8.0))


@pytest.fixture(params=kernels.available_backends())
def kernel(request):
    return kernels.backend(request.param)


ACCEPTANCE_LINES: dict[int, str] = {}


def record_criterion(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
