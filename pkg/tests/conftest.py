import pytest
from hypothesis import settings

from primorial_pnt.config import Config
from primorial_pnt.primes import PrimeEngine, get_engine, set_engine

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


@pytest.fixture
def engine():
    return get_engine()


@pytest.fixture
def swap_engine():
    """Install a custom engine for one test, restoring the shared one afterwards."""
    original = get_engine()

    def install(**kwargs):
        eng = PrimeEngine(Config(**kwargs))
        set_engine(eng)
        return eng

    yield install
    set_engine(original)


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, text = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {text}")
