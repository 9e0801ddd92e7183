import pytest
from hypothesis import HealthCheck, settings

from ramcorr import build_sieve

settings.register_profile(
    "suite", deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")


@pytest.fixture(scope="session")
def table():
    # covers every fixed grid in the unit tests and most acceptance ones
    return build_sieve(4700)


@pytest.fixture(scope="session")
def bigtable():
    # the observational density experiment and the Q = 10^4 series
    return build_sieve(100003)


def pytest_configure(config):
    config._criterion_lines = []


@pytest.fixture
def criterion(request):
    """Record one acceptance-criterion outcome; hard failures assert."""
    def record(num: int, desc: str, ok: bool, detail: str = "",
               hard: bool = True):
        if ok:
            tag = "pass"
        else:
            tag = "FAIL" if hard else "flagged"
        line = f"criterion {num:2d} {desc}: {tag}"
        if detail:
            line += f" ({detail})"
        request.config._criterion_lines.append(line)
        if hard:
            assert ok, line
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criterion_lines", [])
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
