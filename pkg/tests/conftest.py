import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wiener_ecc.corpus import enumerate_connected  # noqa: E402


@pytest.fixture(scope="session")
def corpus_by_n():
    """Isomorphism-reduced connected graphs, n = 1..8."""
    return {n: list(enumerate_connected(n)) for n in range(1, 9)}


@pytest.fixture(scope="session")
def small_corpus(corpus_by_n):
    """Every connected class with 3 <= n <= 7 (fast enough for unit tests)."""
    return [g for n in range(3, 8) for g in corpus_by_n[n]]


_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k, text): acceptance criterion k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    k, text = mark.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[k] = (text, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        text, verdict = _CRITERIA[k]
        terminalreporter.write_line(f"[{verdict}] criterion {k}: {text}")
