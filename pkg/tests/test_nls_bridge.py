import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from crbox.cr_operator import GridField, gaussian_field
from crbox.lattice_resonance import (LatticeField, LatticeParams, gaussian_trace, t_l_apply,
                                     x_sigma_norm_lattice)
from crbox.nls_bridge import (
    ApproxRun, NlsConfig, SplitStep, Stroboscope, fft_size, interaction_profile, lattice_mass,
    nls_evolve, phase_shift_probe, plane_wave, rs_evolve, tl_vs_t_gap, unit_torus_rescale,
    wind_profile, write_report)


def test_fft_size_is_even_and_smooth():
    for m in range(1, 400):
        n = fft_size(m)
        assert n >= m and n % 2 == 0
        k = n
        for p in (2, 3, 5):
            while k % p == 0:
                k //= p
        assert k == 1
    assert fft_size(14) == 16 and fft_size(91) == 96


def test_config_validation():
    with pytest.raises(ValueError):
        NlsConfig(L=8, eps=0.0)
    with pytest.raises(ValueError):
        NlsConfig(L=8, eps=1e-3, sign=2)
    with pytest.raises(ValueError):
        NlsConfig(L=1, eps=1e-3).T_star
    with pytest.raises(ValueError):
        NlsConfig(L=4, eps=1e-3, dt_lin=0.1).steps_per_period()
    cfg = NlsConfig(L=8, eps=1e-3)
    assert cfg.steps_per_period() == 32 * 64
    assert cfg.T_star == pytest.approx(math.pi ** 2 / 6 * 64 / (2e-6 * math.log(8)))


def test_grid_for_respects_explicit_modes():
    p = LatticeParams(4, 2.0)
    assert NlsConfig(L=4, eps=1, modes=40).grid_for(p) == 40
    with pytest.raises(ValueError):
        NlsConfig(L=4, eps=1, modes=10).grid_for(p)


@pytest.mark.parametrize("sign", [1, -1])
def test_plane_wave_closed_form(sign):
    cfg = NlsConfig(L=4, eps=0.3, sign=sign)
    p = LatticeParams(4, 1.0)
    c = 2.0 - 1.0j
    u0 = LatticeField.from_dict(p, {(2, -1): c})
    t = 40 * cfg.step
    traj = nls_evolve(u0, cfg, t)
    assert traj.field(-1)[(2, -1)] == pytest.approx(plane_wave(cfg, p, (2, -1), c, t), abs=1e-13)


def test_free_flow_is_exact_phase():
    cfg = NlsConfig(L=4, eps=1.0, nonlinear=False)
    u0 = gaussian_trace(LatticeParams(4, 2.0))
    t = 3.3
    traj = nls_evolve(u0, cfg, t)
    back = interaction_profile(traj.field(-1), t)
    assert np.allclose(back.values, u0.values, atol=1e-12)


@given(t=st.floats(-5, 5))
def test_profile_wind_roundtrip(t):
    a = gaussian_trace(LatticeParams(3, 1.5))
    assert np.allclose(wind_profile(interaction_profile(a, t), t).values, a.values)


def test_mass_conserved_by_splitting():
    cfg = NlsConfig(L=4, eps=0.05)
    # eps = 0.05 pushes mass past the active ball, so the guard fires
    with pytest.warns(UserWarning, match="outer-band"):
        traj = nls_evolve(gaussian_trace(LatticeParams(4, 2.0)), cfg, 2000 * cfg.step,
                          record_every=200)
    assert traj.mass_drift() < 1e-12
    assert traj.outer_fraction < 1e-6


def test_mass_matches_lattice_normalization():
    p = LatticeParams(2, 1.0)
    u0 = LatticeField.from_dict(p, {(0, 0): 2.0, (1, 0): 1.0})
    solver = SplitStep(NlsConfig(L=2, eps=1.0), 8)
    assert lattice_mass(solver.embed(u0), 2) == pytest.approx(5 / 4)
    assert np.allclose(solver.extract(solver.embed(u0), p).values, u0.values)


def test_datum_lattice_must_match():
    with pytest.raises(ValueError):
        nls_evolve(gaussian_trace(LatticeParams(3, 1.0)), NlsConfig(L=4, eps=1), 1.0)


def test_resonant_system_conserves_mass_and_hamiltonian():
    # RK4 is not conservative: the drift is a global O(dt^4) error
    cfg = NlsConfig(L=4, eps=1e-3)
    b0 = gaussian_trace(LatticeParams(4, 2.0))
    rs = rs_evolve(b0, cfg, 0.5, dt=0.05, record=[0.25, 0.5])
    assert rs.taus == [0.0, 0.25, 0.5]
    drift = max(abs(m / rs.mass[0] - 1) for m in rs.mass)
    assert drift < 1e-6
    assert abs(rs.hamiltonian[1] / rs.hamiltonian[0] - 1) < 1e-6
    fine = rs_evolve(b0, cfg, 0.5, dt=0.025)
    assert abs(fine.mass[-1] / fine.mass[0] - 1) < drift / 16


def test_resonant_system_single_mode():
    # T_L of one mode is the normalization times |c|^2 c: a pure rotation
    cfg = NlsConfig(L=4, eps=1e-3, sign=-1)
    p = LatticeParams(4, 1.0)
    c = 0.7 + 0.2j
    rs = rs_evolve(LatticeField.from_dict(p, {(1, 1): c}), cfg, 1.0, dt=0.01)
    rate = -math.pi ** 2 / 6 / (2 * 16 * math.log(4)) * abs(c) ** 2
    assert rs.fields[-1][(1, 1)] == pytest.approx(c * np.exp(1j * rate), abs=1e-12)


@pytest.mark.parametrize("cutoff, modes", [(4.0, None), (2.0, 34)])
def test_stroboscope_field_is_resonant_operator(cutoff, modes):
    # the period map's slow field on the T* scale approximates i s T_L; the
    # default grid lets cubic products wrap into the ball, which is harmless
    # once the datum has decayed there (or when the grid exceeds 4r + 1)
    cfg = NlsConfig(L=4, eps=1e-4, modes=modes)
    p = LatticeParams(4, cutoff, 2.0)
    a = gaussian_trace(p)
    strobe = Stroboscope(cfg, cfg.grid_for(p), cfg.T_star, p.r)
    F = strobe.solver.extract(strobe.field(strobe.solver.embed(a)), p)
    target = t_l_apply(a, a, a) * 1j
    gap = x_sigma_norm_lattice(F - target, 2.0) / x_sigma_norm_lattice(target, 2.0)
    assert gap < 1e-4


def test_tl_gap_is_cubic():
    G = gaussian_field()
    basis, coeffs = G.hermite
    G2 = GridField.from_hermite(basis, 2 * coeffs, G.box_half, G.n)
    p = LatticeParams(8, 3.0, 2.0)
    assert tl_vs_t_gap(G2, p) == pytest.approx(8 * tl_vs_t_gap(G, p), rel=1e-10)
    assert tl_vs_t_gap(G.like(0 * G.values), p) == 0.0


def test_tl_gap_rejects_off_lattice_samples():
    with pytest.raises(ValueError):
        tl_vs_t_gap(gaussian_field(), LatticeParams(3, 3.0), sample=((0.5, 0.0),))


def test_unit_torus_rescale_validation_and_scales():
    run = ApproxRun(gaussian_field())
    with pytest.raises(ValueError):
        unit_torus_rescale(run, 16, 1.0)
    with pytest.raises(ValueError):
        unit_torus_rescale(run, 1, 1.5)
    setup = unit_torus_rescale(run, 16, 1.5)
    assert setup.T_N == pytest.approx(math.pi ** 2 / 6 * 16 ** 3 / (2 * math.log(16)))
    assert setup.equivalent.eps == pytest.approx(16 ** -1.5)
    assert setup.cfg.L == 1 and setup.cfg.eps == 1.0
    assert np.allclose(setup.datum.values, 16 ** -2.5 * setup.equivalent_datum.values)


def test_phase_probe_free_flow_has_no_phase():
    rep = phase_shift_probe(N=4, s=1.5, taus=[0.5], cutoff=2.0, nonlinear=False)
    assert abs(rep["C_fit"]) < 1e-12


def test_write_report(tmp_path):
    rep = {"tau": [0.1, 0.2], "err": [1.0, 0.5], "B": 3.0}
    j, c = write_report(rep, tmp_path / "sub" / "r")
    assert j.exists() and c.read_text().splitlines() == ["tau,err", "0.10000000000000001,1",
                                                         "0.20000000000000001,0.5"]
