import pytest
from hypothesis import settings

from cuspidal_lab import zoo
from cuspidal_lab.replay import Context

settings.register_profile("seeded", derandomize=True, deadline=None)
settings.load_profile("seeded")


@pytest.fixture(scope="session")
def F():
    return zoo.default_field()


@pytest.fixture(scope="session")
def ctx():
    """Shared recipes and analyses over F_457, seed 0."""
    return Context()


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria[value] = report.outcome


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", "%2d  %s" % (m.args[0], m.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria):
        status = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line("%s  %s" % (status, name))
