from __future__ import annotations

import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run the long checks (Q_6, wider searches)")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running check, needs --slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def slow(request) -> bool:
    return request.config.getoption("--slow")


_acceptance_key = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request) -> list:
    return request.config.stash.setdefault(_acceptance_key, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_acceptance_key, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
