import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from toricsolve import PolySystem

TESTS = Path(__file__).parent
DATA = TESTS / "data"
sys.path.insert(0, str(TESTS))

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def load(name) -> PolySystem:
    return PolySystem.loads((DATA / name).read_text())


@pytest.fixture
def pencil():
    return load("pencil.json")


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
