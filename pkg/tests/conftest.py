import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_distributions(rng, n, kmin=2, kmax=16):
    """Dirichlet(1) draws with a random alphabet size."""
    out = []
    for _ in range(n):
        K = int(rng.integers(kmin, kmax + 1))
        p = rng.dirichlet(np.ones(K))
        p[-1] = 1.0 - p[:-1].sum()
        out.append(p)
    return out


ACCEPTANCE_RESULTS = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and rep.when == "call":
        ACCEPTANCE_RESULTS[marker.args[0]] = (marker.args[1], rep.passed)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        title, passed = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {n:2d}: {title}")
