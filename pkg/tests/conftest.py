"""High-precision oracles shared by the tests.

These evaluate the defining sums directly in mpmath from (eigenvalue, degeneracy)
pairs built independently of the package code.
"""
import mpmath as mp
import pytest

mp.mp.dps = 40


def oracle_fuzzy_modes(n, include_zero=False):
    top = n + 1 if include_zero else n
    M = mp.mpf(n * (n + 2))
    return [(mp.mpf(l) ** 2 * (1 + (1 - mp.mpf(l) ** 2) / M), 4 * l) for l in range(1, top + 1)]


def oracle_standard_modes(n_max):
    return [(mp.mpf(k) ** 2, 4 * k) for k in range(1, n_max + 1)]


def oracle_trace(modes, t):
    t = mp.mpf(t)
    return mp.fsum(d * mp.exp(-e * t) for e, d in modes)


def oracle_trace_dt(modes, t):
    t = mp.mpf(t)
    return -mp.fsum(d * e * mp.exp(-e * t) for e, d in modes)


def oracle_area(modes, lam):
    t = 1 / mp.mpf(lam) ** 2
    return 2 * mp.pi * (oracle_trace(modes, t) + mp.mpf(1) / 3) * t


def oracle_dimension(modes, lam):
    t = 1 / mp.mpf(lam) ** 2
    return -2 * t * oracle_trace_dt(modes, t) / oracle_trace(modes, t)


@pytest.fixture
def fuzzy2():
    from fuzzy_sphere import FuzzySphereParams, fuzzy_dirac_spectrum
    return fuzzy_dirac_spectrum(FuzzySphereParams(2))


@pytest.fixture
def standard40():
    from fuzzy_sphere import standard_dirac_spectrum
    return standard_dirac_spectrum(40)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "xfailed", "xpassed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        tag = {"passed": "PASS", "failed": "FAIL", "xfailed": "XFAIL", "xpassed": "XPASS"}
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{tag[outcome]:5s} {name}")
