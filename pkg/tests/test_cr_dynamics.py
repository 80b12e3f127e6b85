import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from crbox.cr_dynamics import (
    HermiteState, Integrator, advance, coefficient_leakage, coupling_tensor, direct_rhs,
    eigenspace_flow, evolve, fourier_commutation_check, hermite_lift, hermite_project,
    level_leakage, orbital_stability, phase_orbit_distance, rhs, step)
from crbox.cr_operator import (GridField, QuadratureSpec, catalog_solution, gaussian_field,
                               random_field, x_sigma_norm)
from crbox.hermite import HermiteBasis

SMALL = QuadratureSpec(hermite_degree=10)


def test_integrator_validation():
    with pytest.raises(ValueError):
        Integrator(scheme="euler")
    with pytest.raises(ValueError):
        Integrator(dt=0.0)
    G = gaussian_field()
    assert Integrator.default_dt(G) == pytest.approx(0.01 / x_sigma_norm(G, 3.0) ** 2)


def test_gaussian_rotates_at_pi_over_2():
    G = gaussian_field()
    traj = evolve(G, 1.0, Integrator(dt=0.025, ledger_every=40))
    assert np.allclose(traj.final.values, np.exp(0.5j * math.pi) * G.values, atol=1e-6)


def test_e4_profile_rotates_at_catalog_rate():
    entry = catalog_solution("hermite_e4")
    traj = evolve(entry.field, 0.5, Integrator(dt=0.025, quad=SMALL, ledger_every=100))
    assert np.allclose(traj.final.values, np.exp(0.5j * entry.rate) * entry.field.values,
                       atol=1e-6)


def test_single_step_matches_advance():
    f = random_field(1, n=32, basis_degree=10)
    integ = Integrator(dt=0.01, quad=SMALL)
    b = SMALL.basis()
    one = step(f, integ)
    assert np.allclose(one.coefficients(b), advance(b, f.coefficients(b), 0.01, 0.01))


def test_advance_backwards_inverts():
    b = SMALL.basis()
    c = random_field(2, n=32, basis_degree=10).coefficients(b)
    there = advance(b, c, 0.3, 0.01)
    assert np.allclose(advance(b, there, -0.3, 0.01), c, atol=1e-9)


def test_ledger_conserved_random_datum():
    f = random_field(7, n=48, basis_degree=16)
    traj = evolve(f, 0.5, Integrator(dt=0.02, quad=QuadratureSpec(hermite_degree=16),
                                     ledger_every=5))
    assert traj.max_relative_drift().max() < 1e-5
    assert len(traj.times) == len(traj.ledger) == 6


def test_snapshots_recorded():
    traj = evolve(gaussian_field(n=32), 0.2, Integrator(dt=0.05, quad=SMALL), snapshot_every=2)
    assert [t for t, _ in traj.snapshots] == pytest.approx([0.0, 0.1, 0.2])


@given(theta=st.floats(-3, 3))
def test_flow_is_phase_covariant(theta):
    b = HermiteBasis(6)
    rng = np.random.default_rng(0)
    c = (rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))) * b.mask * 0.2
    ph = np.exp(1j * theta)
    assert np.allclose(advance(b, c * ph, 0.2, 0.05), ph * advance(b, c, 0.2, 0.05), atol=1e-12)


@given(seed=st.integers(0, 10 ** 6))
def test_rhs_preserves_mass_to_first_order(seed):
    b = HermiteBasis(6)
    rng = np.random.default_rng(seed)
    c = (rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))) * b.mask
    # d/dt |c|^2 = 2 Re <c, i T(c)> = -2 Im <c, T(c)> = 0
    assert abs(np.real(np.vdot(c, rhs(b, c)))) < 1e-10 * b.mass(c) ** 2


def test_fourier_commutation_small():
    integ = Integrator(dt=0.05, quad=SMALL, ledger_every=100)
    zero = GridField(5.0, 16, np.zeros((16, 16)))
    assert fourier_commutation_check(zero, 1.0, integ) == 0.0
    assert fourier_commutation_check(random_field(3, n=64, basis_degree=10), 0.5, integ) < 1e-10


def test_direct_rhs_agrees_with_hermite_rhs():
    b = HermiteBasis(4)
    c = b.zeros()
    c[1, 0], c[0, 1], c[2, 1] = 1.0, 0.5j, -0.3
    quad = QuadratureSpec(z_radius=8.0, z_nodes=40, lambda_nodes=20)
    assert np.allclose(direct_rhs(b, c, quad), rhs(b, c), atol=1e-7)


# ---------------------------------------------------------------- eigenspaces

def test_hermite_state_validation():
    with pytest.raises(ValueError):
        HermiteState(3, [1.0])
    with pytest.raises(ValueError):
        HermiteState(4, [1.0])
    assert HermiteState(6, [1, 0, 0]).k == 3


def test_project_lift_roundtrip():
    s = HermiteState(6, [1.0, 0.5j, -0.25])
    g = hermite_lift(s, 6.0, 32)
    back = hermite_project(g, 6)
    assert np.allclose(back.coeffs, s.coeffs, atol=1e-12)
    assert level_leakage(g, 6, HermiteBasis(8)) < 1e-14


@given(coeffs=st.lists(st.complex_numbers(max_magnitude=1.0), min_size=3, max_size=3))
def test_eigenspace_flow_conserves_mass(coeffs):
    s = HermiteState(6, coeffs)
    m0 = float(np.sum(np.abs(s.coeffs) ** 2))
    out = eigenspace_flow(s, 0.5, dt=0.01)
    assert np.sum(np.abs(out.coeffs) ** 2) == pytest.approx(m0, rel=1e-7, abs=1e-14)


def test_eigenspace_flow_matches_full_flow():
    s = HermiteState(6, [0.7, 0.2 - 0.4j, 0.1j])
    b = HermiteBasis(8)
    g = hermite_lift(s, 6.0, 32)
    full = advance(b, g.coefficients(b), 0.5, 0.01)
    assert coefficient_leakage(b, full, 6) < 1e-20
    reduced = eigenspace_flow(s, 0.5, dt=0.01)
    assert np.allclose([full[i, j] for i, j in b.level_indices(3)], reduced.coeffs, atol=1e-10)


def test_coupling_tensor_disk_cache(tmp_path):
    a = coupling_tensor(3, tmp_path)
    files = list(tmp_path.glob("coupling_E6_*.npy"))
    assert len(files) == 1
    assert np.array_equal(coupling_tensor(3, tmp_path), a)
    assert np.array_equal(coupling_tensor(3), a)


def test_orbital_stability_scales_with_delta():
    integ = Integrator(dt=0.1, quad=QuadratureSpec(hermite_degree=12))
    d1 = orbital_stability(1e-2, t_final=1.0, integ=integ)
    d2 = orbital_stability(1e-3, t_final=1.0, integ=integ)
    assert d1 < 1e-1 and d2 < 1e-2
    assert d1 / d2 == pytest.approx(10, rel=0.2)


def test_phase_orbit_distance_ignores_phase():
    G = gaussian_field(n=32)
    assert phase_orbit_distance(G.like(1j * G.values), G) < 1e-7
