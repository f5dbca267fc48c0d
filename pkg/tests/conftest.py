import math

import pytest

from suqosc.deform import DeformationParameter

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, title: str, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title} ({detail})")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)


@pytest.fixture
def q2():
    """q = 2 on the real axis."""
    return DeformationParameter.real(math.log(2.0))


@pytest.fixture
def q4():
    """q = 4: [1/2]_q = 2/5 and [3/2]_q = 2.1 exactly."""
    return DeformationParameter.real(2.0 * math.log(2.0))


def circle_at_cos(cw: float) -> DeformationParameter:
    return DeformationParameter.circle(math.acos(cw))
