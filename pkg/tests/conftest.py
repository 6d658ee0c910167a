import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_OUTCOME = pytest.StashKey[str]()
_CRITERIA = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    _CRITERIA.extend(i for i in items if i.get_closest_marker("criterion"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.failed:
        item.stash[_OUTCOME] = "failed"
    elif rep.when == "call":
        item.stash.setdefault(_OUTCOME, rep.outcome)


def pytest_terminal_summary(terminalreporter):
    rows = []
    for item in _CRITERIA:
        if _OUTCOME in item.stash:
            number, title = item.get_closest_marker("criterion").args
            rows.append((number, item.stash[_OUTCOME], title))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, outcome, title in sorted(rows):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
