import pytest

from cubelines.cube import CubeParams
from cubelines.oracle import brute_force_automorphisms, brute_force_lines

ACCEPTANCE: dict[str, str] = {}

_oracle_cache: dict = {}


def oracle_lines(n, d):
    key = ("lines", n, d)
    if key not in _oracle_cache:
        _oracle_cache[key] = brute_force_lines(CubeParams(n, d))
    return _oracle_cache[key]


def oracle_automorphisms(n, d):
    key = ("auts", n, d)
    if key not in _oracle_cache:
        _oracle_cache[key] = set(brute_force_automorphisms(CubeParams(n, d), oracle_lines(n, d)))
    return _oracle_cache[key]


@pytest.fixture
def record():
    """Record a one-line acceptance verdict printed in the terminal summary."""
    def _record(name, ok, detail=""):
        ACCEPTANCE[name] = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
        assert ok, detail
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for name in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(ACCEPTANCE[name])
