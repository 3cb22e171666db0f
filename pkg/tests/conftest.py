from __future__ import annotations

import pytest

from trimatroid import catalog


@pytest.fixture(scope="session")
def cat():
    """Lazy access to catalog matroids by display name."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = catalog.get_by_name(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
