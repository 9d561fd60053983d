import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from sparseclique.enumeration import ALGORITHMS, CliqueSink, run_algorithm
from sparseclique.oracle import canonicalize

DATA = Path(__file__).parent / "data"

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def all_variants(g):
    """Canonical clique list from every variant, keyed by name."""
    out = {}
    for name in ALGORITHMS:
        sink = CliqueSink.collector()
        run_algorithm(g, name, sink)
        out[name] = canonicalize(sink.cliques)
    return out


@pytest.fixture(scope="session")
def data_dir():
    return DATA


ACCEPTANCE_LINES: list[str] = []


def record_criterion(tag: str, ok: bool, detail: str) -> str:
    line = f"{tag} {'PASS' if ok else 'FAIL'}: {detail}"
    ACCEPTANCE_LINES.append(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
