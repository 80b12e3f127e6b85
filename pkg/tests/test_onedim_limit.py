import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from crbox.onedim_limit import (
    Lattice1D, Line1DField, apply_gauge, continuum_gap, continuum_time, gauge_rate,
    onedim_exact, onedim_nls_profile, onedim_resonant_evolve, per_mode_gap, resonant_sum_1d,
    undo_gauge)

g0 = lambda x: np.exp(-x * x / 2) / math.pi ** 0.25 * (1 + 0.5j * np.sin(x))


def brute_resonant_sum_1d(b):
    """Direct sum over k1 - k2 + k3 = k with k1^2 - k2^2 + k3^2 = k^2."""
    r = (len(b) - 1) // 2
    out = np.zeros_like(b)
    for k in range(-r, r + 1):
        for k1 in range(-r, r + 1):
            for k3 in range(-r, r + 1):
                k2 = k1 + k3 - k
                if abs(k2) <= r and k1 * k1 - k2 * k2 + k3 * k3 == k * k:
                    out[k + r] += b[k1 + r] * np.conj(b[k2 + r]) * b[k3 + r]
    return out


@given(st.lists(st.complex_numbers(max_magnitude=3), min_size=3, max_size=11)
       .filter(lambda v: len(v) % 2 == 1))
def test_resonant_sum_matches_brute_force(v):
    b = np.array(v, dtype=complex)
    assert np.allclose(resonant_sum_1d(b), brute_resonant_sum_1d(b), atol=1e-9)


@pytest.mark.parametrize("L", [4, 16])
@pytest.mark.parametrize("sign", [1, -1])
def test_per_mode_gap_at_machine_precision(L, sign):
    assert per_mode_gap(g0, L, 4.0, 0.7, 40.0 * L * L, sign) < 1e-13


def test_rk4_agrees_with_closed_form():
    b0 = Lattice1D.trace(g0, 4, 3.0)
    t = 2.0 * 16
    closed = onedim_resonant_evolve(b0, 1.0, t)
    err = [np.max(np.abs(closed.values - onedim_resonant_evolve(b0, 1.0, t, method="rk4",
                                                                dt=dt).values))
           for dt in (0.25, 0.125)]
    assert err[0] < 1e-3
    assert 12 < err[0] / err[1] < 20
    with pytest.raises(ValueError):
        onedim_resonant_evolve(b0, 1.0, t, method="euler")


@given(t=st.floats(-50, 50), eps=st.floats(0.1, 2))
def test_gauge_roundtrip(t, eps):
    b = Lattice1D.trace(g0, 4, 2.0)
    back = undo_gauge(apply_gauge(b, eps, t), eps, t)
    assert np.allclose(back.values, b.values, atol=1e-13)
    assert gauge_rate(b, eps, -1) == -gauge_rate(b, eps, 1)


@given(t=st.floats(0, 1e4), sign=st.sampled_from([1, -1]))
def test_moduli_are_invariant(t, sign):
    b0 = Lattice1D.trace(g0, 4, 3.0)
    b = onedim_resonant_evolve(b0, 0.5, t, sign)
    assert np.allclose(np.abs(b.values), np.abs(b0.values), atol=1e-13)


def test_single_mode_closed_form():
    single = Lattice1D(8, np.array([0, 0, 2.0 + 0j, 0, 0]))
    b = onedim_resonant_evolve(single, 1.0, 3.0)
    # d_t b = i eps^2 L^-2 (2 S - |b|^2) b with S = |b|^2 = 4
    assert b.values[2] == pytest.approx(2 * np.exp(1j * 4 / 64 * 3.0), abs=1e-14)
    assert np.all(b.values[[0, 1, 3, 4]] == 0)


def test_exact_examples():
    assert onedim_exact(Line1DField([0.0], [0.0]), 5.0).values[0] == 0
    assert onedim_exact(Line1DField([0.0], [2.0]), 1.0).values[0] == pytest.approx(2 * np.exp(4j))
    f = Line1DField.from_function(g0, np.linspace(-5, 5, 101))
    assert np.allclose(np.abs(onedim_exact(f, 2.7).values), np.abs(f.values))


def test_continuum_time_sign():
    assert continuum_time(0.5, 4, 16.0, sign=-1) == pytest.approx(0.25)
    assert continuum_time(0.5, 4, 16.0, sign=1) == pytest.approx(-0.25)


def test_line_field_validation():
    with pytest.raises(ValueError):
        Line1DField([0.0, 1.0], [1.0], 2.0)
    with pytest.raises(ValueError):
        Line1DField([0.0], [1.0], 1.0)
    f = Line1DField([0.0, 1.0], [1.0, 1.0], 2.0)
    assert f.x_sigma_norm() == pytest.approx(2.0)


def test_continuum_gap_decreases_with_L():
    gaps = [continuum_gap(g0, L, 1.0) for L in (16, 64, 256)]
    assert gaps[0] > gaps[1] > gaps[2]


@pytest.mark.parametrize("L", [4, 8])
def test_nls_profile_tracks_resonant_flow(L):
    b0 = Lattice1D.trace(g0, L, 3.0)
    t = 0.5 * L * L / 1e-4
    gap = np.max(np.abs(onedim_nls_profile(b0, 1e-2, t).values
                        - onedim_resonant_evolve(b0, 1e-2, t).values))
    assert gap < 1e-3
