import sys

import pytest
from hypothesis import settings

from innerbody.corpus import SplitMix64

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[key])


@pytest.fixture
def rng():
    return SplitMix64(20240607)
