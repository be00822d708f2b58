import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import oracle_fuzzy_modes, oracle_standard_modes, oracle_trace, oracle_trace_dt
from fuzzy_sphere import (
    DiracSpectrum,
    FuzzySphereParams,
    SpectralLine,
    fuzzy_dirac_spectrum,
    heat_trace,
    heat_trace_derivative,
    heat_trace_point,
    standard_asymptotic_trace,
    standard_dirac_spectrum,
)

ONE_LINE = DiracSpectrum((SpectralLine(1.0, 4),), "one line")

# frozen from the mpmath oracle in conftest
P_N2_T1 = 2.1281977536769596
DP_N2_T1 = -3.1132177371637452
P_STD40_T_NINTH = 17.662860965685027


def test_single_line():
    assert heat_trace(ONE_LINE, 1.0) == pytest.approx(4 * math.exp(-1), rel=1e-15)
    assert heat_trace_derivative(ONE_LINE, 1.0) == pytest.approx(-4 * math.exp(-1), rel=1e-15)


def test_fuzzy_n2_against_oracle(fuzzy2):
    assert float(oracle_trace(oracle_fuzzy_modes(2), 1)) == pytest.approx(P_N2_T1, rel=1e-15)
    assert heat_trace(fuzzy2, 1.0) == pytest.approx(P_N2_T1, rel=1e-15)
    assert heat_trace_derivative(fuzzy2, 1.0) == pytest.approx(DP_N2_T1, rel=1e-15)
    assert float(oracle_trace_dt(oracle_fuzzy_modes(2), 1)) == pytest.approx(DP_N2_T1, rel=1e-15)


def test_t_zero_is_total_dim(fuzzy2):
    assert heat_trace(fuzzy2, 0.0) == 12.0
    assert heat_trace(fuzzy2, 1e-300) == pytest.approx(12.0)


def test_negative_t_rejected(fuzzy2):
    with pytest.raises(ValueError):
        heat_trace(fuzzy2, -1e-3)
    with pytest.raises(ValueError):
        heat_trace_derivative(fuzzy2, -1.0)


def test_zero_modes_only():
    spec = DiracSpectrum((SpectralLine(0.0, 12),), "zero")
    assert heat_trace_derivative(spec, 3.0) == 0.0
    assert heat_trace(spec, 3.0) == 12.0


def test_underflow_clamp():
    spec = DiracSpectrum((SpectralLine(1.0, 1), SpectralLine(800.0, 5)), "clamp")
    assert heat_trace(spec, 1.0) == math.exp(-1)
    assert heat_trace_derivative(spec, 1.0) == -math.exp(-1)


def test_point_bundle(fuzzy2):
    p = heat_trace_point(fuzzy2, 1.0)
    assert (p.t, p.trace, p.trace_t_derivative) == (1.0, heat_trace(fuzzy2, 1.0), heat_trace_derivative(fuzzy2, 1.0))


def test_standard_asymptotic():
    assert standard_asymptotic_trace(0.1, 4 * math.pi) == pytest.approx(20 - 1 / 3, rel=1e-14)
    assert standard_asymptotic_trace(1 / 9, 4 * math.pi) == pytest.approx(18 - 1 / 3, rel=1e-14)
    assert standard_asymptotic_trace(1e12) == pytest.approx(-1 / 3, abs=1e-9)
    with pytest.raises(ValueError):
        standard_asymptotic_trace(0.0)


def test_truncated_standard_trace_oracle(standard40):
    assert float(oracle_trace(oracle_standard_modes(40), 1 / np.float64(9))) == pytest.approx(P_STD40_T_NINTH, rel=1e-14)
    assert heat_trace(standard40, 1 / 9) == pytest.approx(P_STD40_T_NINTH, rel=1e-14)


def test_asymptotic_agreement_window(standard40):
    for t in np.linspace(0.04, 0.25, 60):
        assert abs(heat_trace(standard40, t) - standard_asymptotic_trace(t)) <= 0.02


@pytest.mark.parametrize("n", [2, 8, 32])
def test_derivative_matches_central_difference(n):
    spec = fuzzy_dirac_spectrum(FuzzySphereParams(n))
    for t in np.geomspace(1e-3, 10, 40):
        h = 1e-5 * t
        fd = (heat_trace(spec, t + h) - heat_trace(spec, t - h)) / (2 * h)
        d = heat_trace_derivative(spec, t)
        assert abs(d - fd) / abs(d) <= 1e-6


@pytest.mark.parametrize("spec", [
    fuzzy_dirac_spectrum(FuzzySphereParams(3)),
    fuzzy_dirac_spectrum(FuzzySphereParams(40)),
    standard_dirac_spectrum(40),
], ids=lambda s: s.label)
def test_monotone_and_positive(spec):
    ts = np.geomspace(1e-3, 50, 300)
    values = [heat_trace(spec, t) for t in ts]
    assert all(v > 0 for v in values)
    assert all(b < a for a, b in zip(values, values[1:]))
    assert all(heat_trace_derivative(spec, t) <= 0 for t in ts)


@settings(max_examples=50, deadline=None)
@given(n=st.integers(1, 120), t=st.floats(1e-4, 50))
def test_matches_mpmath(n, t):
    spec = fuzzy_dirac_spectrum(FuzzySphereParams(n))
    modes = oracle_fuzzy_modes(n)
    assert heat_trace(spec, t) == pytest.approx(float(oracle_trace(modes, t)), rel=1e-13)
    assert heat_trace_derivative(spec, t) == pytest.approx(float(oracle_trace_dt(modes, t)), rel=1e-13)


def test_deterministic_across_threads():
    from concurrent.futures import ThreadPoolExecutor
    spec = fuzzy_dirac_spectrum(FuzzySphereParams(64))
    ts = list(np.geomspace(1e-4, 10, 200))
    serial = [heat_trace(spec, t) for t in ts]
    with ThreadPoolExecutor(8) as pool:
        parallel = list(pool.map(lambda t: heat_trace(spec, t), ts))
    assert serial == parallel
