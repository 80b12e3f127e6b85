"""Time integration of the CR equation  -i d_t g = T(g, g, g).

States are held as truncated Hermite expansions (see crbox.hermite) and advanced
with classical RK4; fields are lifted to grids for the conservation ledger and
for output.  The truncation is a Galerkin projection that commutes with the
harmonic oscillator, so mass, the Hamiltonian and every E_{2k} are exactly
invariant for the truncated flow; momentum, position and the other ledger
entries are conserved up to truncation error.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

from .cr_operator import (DEFAULT_QUAD, ConservedLedger, GridField, QuadratureSpec, conserved,
                          fourier, gaussian_field)
from .hermite import HermiteBasis


@dataclass(frozen=True)
class Integrator:
    scheme: str = "rk4"
    dt: float = 0.01
    quad: QuadratureSpec = DEFAULT_QUAD
    ledger_every: int = 10

    def __post_init__(self) -> None:
        if self.scheme != "rk4":
            raise ValueError("only classical RK4 is implemented")
        if not self.dt > 0:
            raise ValueError("dt must be positive")

    @staticmethod
    def default_dt(g0: GridField, sigma: float = 3.0) -> float:
        """0.01 / ||g0||_{X^sigma}^2, the local-existence time scale."""
        from .cr_operator import x_sigma_norm
        return 0.01 / x_sigma_norm(g0, sigma) ** 2


@dataclass
class Trajectory:
    times: list[float] = field(default_factory=list)
    ledger: list[ConservedLedger] = field(default_factory=list)
    snapshots: list[tuple[float, GridField]] = field(default_factory=list)
    final: GridField | None = None
    final_coeffs: np.ndarray | None = None

    def ledger_array(self) -> np.ndarray:
        return np.array([row.as_row() for row in self.ledger])

    def max_relative_drift(self) -> np.ndarray:
        """Per ledger entry: max_t |q(t) - q(0)| / max(|q(0)|, scale floor)."""
        arr = self.ledger_array()
        ref = np.abs(arr[0])
        floor = np.maximum(ref, 1e-3 * np.max(np.abs(arr[0, [0, 6, 7]])))
        return np.max(np.abs(arr - arr[0]), axis=0) / floor


class StepRejected(RuntimeError):
    pass


def rhs(basis: HermiteBasis, c: np.ndarray) -> np.ndarray:
    return 1j * basis.cubic(c)


def rk4_step(basis: HermiteBasis, c: np.ndarray, dt: float) -> np.ndarray:
    k1 = rhs(basis, c)
    k2 = rhs(basis, c + 0.5 * dt * k1)
    k3 = rhs(basis, c + 0.5 * dt * k2)
    k4 = rhs(basis, c + dt * k3)
    return c + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)


def _checked_step(basis: HermiteBasis, c: np.ndarray, dt: float) -> np.ndarray:
    new = rk4_step(basis, c, dt)
    m0 = basis.mass(c)
    if m0 == 0:
        return new
    freq = np.linalg.norm(basis.cubic(c)) / math.sqrt(m0)
    budget = 10.0 * (freq * dt) ** 5 + 1e-13
    if abs(basis.mass(new) - m0) / m0 > budget:
        raise StepRejected(f"one-step mass drift above {budget:.2e}")
    return new


def step(g: GridField, integ: Integrator) -> GridField:
    """One RK4 step of d_t g = i T(g, g, g)."""
    basis = integ.quad.basis()
    c = _checked_step(basis, g.coefficients(basis), integ.dt)
    return GridField.from_hermite(basis, c, g.box_half, g.n)


def advance(basis: HermiteBasis, c: np.ndarray, t: float, dt: float) -> np.ndarray:
    """Integrate coefficients over time t (sign allowed) with steps of at most dt."""
    nsteps = max(1, int(math.ceil(abs(t) / dt - 1e-12)))
    h = t / nsteps
    for _ in range(nsteps):
        c = rk4_step(basis, c, h)
    return c


def evolve(g0: GridField, t_final: float, integ: Integrator,
           snapshot_every: int | None = None) -> Trajectory:
    basis = integ.quad.basis()
    c = g0.coefficients(basis)
    nsteps = max(1, int(round(t_final / integ.dt)))
    dt = t_final / nsteps
    traj = Trajectory()

    def record(t: float, c: np.ndarray, snap: bool) -> GridField:
        fld = GridField.from_hermite(basis, c, g0.box_half, g0.n)
        traj.times.append(t)
        traj.ledger.append(conserved(fld, integ.quad, hamiltonian=basis.hamiltonian(c)))
        if snap:
            traj.snapshots.append((t, fld))
        return fld

    record(0.0, c, snapshot_every is not None)
    for i in range(1, nsteps + 1):
        try:
            c = _checked_step(basis, c, dt)
        except StepRejected:
            c = advance(basis, c, dt, dt / 2)  # halve once on alarm
        last = i == nsteps
        snap = snapshot_every is not None and (i % snapshot_every == 0 or last)
        if i % integ.ledger_every == 0 or last or snap:
            fld = record(i * dt, c, snap)
    traj.final = fld
    traj.final_coeffs = c
    return traj


def fourier_commutation_check(g0: GridField, t_final: float, integ: Integrator) -> float:
    """||F(g(t)) - (evolution of F g0)(t)||_2 with F the grid Fourier transform."""
    if not np.any(g0.values):
        return 0.0
    gt = evolve(g0, t_final, integ).final
    g0_hat = fourier(g0)
    ht = evolve(g0_hat, t_final, integ).final
    diff = fourier(gt).values - ht.values
    return float(np.sqrt(np.sum(np.abs(diff) ** 2)) * g0_hat.h)


def phase_orbit_distance(g: GridField, ref: GridField) -> float:
    """min over theta of ||g - e^{i theta} ref||_2."""
    a = g.norm2() ** 2 + ref.norm2() ** 2 - 2 * abs(g.inner(ref))
    return math.sqrt(max(a, 0.0))


def orbital_stability(delta: float, t_final: float = 5.0, seed: int = 0,
                      integ: Integrator | None = None) -> float:
    """sup_t distance to the phase orbit of G for a delta-perturbed Gaussian.

    The perturbation is a random smooth field normalized to 1 in the norm
    ||f||_{H^1} + ||<x> f||_2.
    """
    from .cr_operator import gradient, random_field
    integ = integ or Integrator(dt=0.05, ledger_every=10)
    G = gaussian_field()
    basis = integ.quad.basis()
    p = random_field(seed, max_level=5, box_half=G.box_half, n=G.n,
                     basis_degree=basis.degree)
    X, Y = p.mesh()
    dx, dy = gradient(p)
    w = p.h ** 2
    norm = math.sqrt(np.sum(np.abs(p.values) ** 2 + np.abs(dx) ** 2 + np.abs(dy) ** 2) * w) + \
        math.sqrt(np.sum((1 + X * X + Y * Y) * np.abs(p.values) ** 2) * w)
    c = G.coefficients(basis) + delta * p.coefficients(basis) / norm
    nsteps = max(1, int(round(t_final / integ.dt)))
    worst = 0.0
    for _ in range(nsteps):
        c = rk4_step(basis, c, t_final / nsteps)
        fld = GridField.from_hermite(basis, c, G.box_half, G.n)
        worst = max(worst, phase_orbit_distance(fld, G))
    return worst


def direct_rhs(basis: HermiteBasis, c: np.ndarray, quad: QuadratureSpec) -> np.ndarray:
    """i * P_D T(f, f, f) with T by direct (z, lambda) quadrature at Gauss-Hermite nodes.

    Independent of the lens identity; the only Hermite ingredient is the
    final projection onto the truncated basis.
    """
    from .cr_operator import t_apply_points
    c = np.asarray(c, dtype=complex) * basis.mask
    f = GridField(1e3, 2, np.zeros((2, 2)), "analytic-closure",
                  lambda x, y: basis.evaluate(c, x, y))
    x, w, phi = basis._projection_rule
    X, Y = np.meshgrid(x, x, indexing="ij")
    vals = t_apply_points(f, f, f, np.stack([X.ravel(), Y.ravel()], axis=1), quad, chunk=8)
    vals = vals.reshape(X.shape) * (w[:, None] * w[None, :])
    return 1j * (phi.T @ vals @ phi) * basis.mask


def evolve_direct(g0: GridField, t_final: float, dt: float, quad: QuadratureSpec,
                  degree: int = 6) -> tuple[HermiteBasis, list[float], list[np.ndarray]]:
    """RK4 with the direct-quadrature right-hand side; returns coefficient snapshots."""
    basis = HermiteBasis(degree)
    c = g0.coefficients(basis)
    nsteps = max(1, int(round(t_final / dt)))
    h = t_final / nsteps
    times, out = [0.0], [c]
    for i in range(nsteps):
        k1 = direct_rhs(basis, c, quad)
        k2 = direct_rhs(basis, c + 0.5 * h * k1, quad)
        k3 = direct_rhs(basis, c + 0.5 * h * k2, quad)
        k4 = direct_rhs(basis, c + h * k3, quad)
        c = c + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        times.append((i + 1) * h)
        out.append(c)
    return basis, times, out


def coefficient_leakage(basis: HermiteBasis, c: np.ndarray, level: int) -> float:
    """Fraction of sum |c|^2 outside E_{level}."""
    total = basis.mass(c)
    inside = basis.mass(basis.level_projector(c, level // 2))
    return (total - inside) / total if total > 0 else 0.0


# ---------------------------------------------------------------- eigenspaces

@dataclass
class HermiteState:
    """Coefficients of a function in E_{2k} (eigenvalue ``level`` = 2k of -Delta + |x|^2).

    Basis vector j is h_{k-1-j}(x) h_j(y), so index 0 is the x_1-oriented one.
    """

    level: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if self.level < 2 or self.level % 2:
            raise ValueError("level must be an even integer >= 2")
        self.coeffs = np.asarray(self.coeffs, dtype=complex)
        if self.coeffs.shape != (self.level // 2,):
            raise ValueError("E_{2k} has dimension k")

    @property
    def k(self) -> int:
        return self.level // 2


def hermite_project(g: GridField, level: int, basis: HermiteBasis | None = None) -> HermiteState:
    k = level // 2
    basis = basis or HermiteBasis(max(k, 8))
    c = g.coefficients(basis)
    return HermiteState(level, np.array([c[i, j] for i, j in basis.level_indices(k)]))


def hermite_lift(state: HermiteState, box_half: float, n: int) -> GridField:
    basis = HermiteBasis(state.k)
    c = basis.zeros()
    for v, (i, j) in zip(state.coeffs, basis.level_indices(state.k)):
        c[i, j] = v
    return GridField.from_hermite(basis, c, box_half, n)


def level_leakage(g: GridField, level: int, basis: HermiteBasis) -> float:
    """Fraction of the mass of g lying outside E_{level}."""
    c = g.coefficients(basis)
    total = basis.mass(c)
    inside = basis.mass(basis.level_projector(c, level // 2))
    return (total - inside) / total if total > 0 else 0.0


def _tensor_path(cache_dir: Path, k: int) -> Path:
    tag = hashlib.sha256(f"E{2 * k}:hermite-lens:v1".encode()).hexdigest()[:16]
    return cache_dir / f"coupling_E{2 * k}_{tag}.npy"


@lru_cache(maxsize=8)
def _coupling_tensor_mem(k: int) -> np.ndarray:
    basis = HermiteBasis(k)
    idx = basis.level_indices(k)
    out = np.zeros((k, k, k, k), dtype=complex)
    units = []
    for i, j in idx:
        u = basis.zeros()
        u[i, j] = 1.0
        units.append(u)
    for q in range(k):
        for r in range(k):
            for s in range(k):
                t = basis.trilinear(units[q], units[r], units[s])
                out[:, q, r, s] = [t[i, j] for i, j in idx]
    return out


def coupling_tensor(k: int, cache_dir: str | Path | None = None) -> np.ndarray:
    """Gamma[p, q, r, s] = <T(e_q, e_r, e_s), e_p> on E_{2k}, optionally cached on disk."""
    if cache_dir is None:
        return _coupling_tensor_mem(k)
    path = _tensor_path(Path(cache_dir), k)
    if path.exists():
        return np.load(path)
    gamma = _coupling_tensor_mem(k)
    path.parent.mkdir(parents=True, exist_ok=True)
    np.save(path, gamma)
    return gamma


def eigenspace_flow(state: HermiteState, t_final: float, dt: float = 0.01,
                    cache_dir: str | Path | None = None) -> HermiteState:
    """Galerkin flow of CR restricted to E_{2k}: dc/dt = i Gamma(c, conj c, c)."""
    gamma = coupling_tensor(state.k, cache_dir)

    def f(c):
        return 1j * np.einsum("pqrs,q,r,s->p", gamma, c, np.conj(c), c)

    c = state.coeffs.copy()
    nsteps = max(1, int(math.ceil(abs(t_final) / dt)))
    h = t_final / nsteps
    for _ in range(nsteps):
        k1 = f(c)
        k2 = f(c + 0.5 * h * k1)
        k3 = f(c + 0.5 * h * k2)
        k4 = f(c + h * k3)
        c = c + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return HermiteState(state.level, c)
