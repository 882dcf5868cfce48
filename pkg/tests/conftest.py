import pytest

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")


class Sentinel:
    """Tail suspension that counts how often it is forced."""

    def __init__(self, value=None):
        self.value = value
        self.forced = 0

    def __call__(self):
        self.forced += 1
        return self.value


@pytest.fixture
def sentinel():
    return Sentinel
