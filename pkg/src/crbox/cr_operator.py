"""The continuous resonant operator T on R^2 and the functionals built on it.

T(f, g, h)(xi) = int_{-1}^{1} int_{R^2} f(xi + z) conj(g(xi + z + lam z^perp))
                 h(xi + lam z^perp) dz dlam,   z^perp = (-z_2, z_1).

Two evaluation routes are provided: ``direct`` tensor Gauss-Legendre
quadrature of the defining integral, and ``hermite`` (see crbox.hermite),
which is exact on truncated Hermite expansions and much faster.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np
import scipy.fft as sfft
from scipy import ndimage

from .hermite import HermiteBasis

Closure = Callable[[np.ndarray, np.ndarray], np.ndarray]
Method = Literal["direct", "hermite"]

SQRT_PI = math.sqrt(math.pi)


def gaussian(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Mass-one Gaussian G = pi^{-1/2} exp(-|x|^2 / 2)."""
    return np.exp(-0.5 * (x * x + y * y)) / SQRT_PI + 0j


def self_dual_box(n: int) -> float:
    """Half-width b with b = pi / h, so the grid Fourier transform maps the grid to itself."""
    return math.sqrt(math.pi * n / 2)


# ---------------------------------------------------------------- types

@dataclass(eq=False)
class GridField:
    """Complex samples on [-b, b)^2 with n nodes per axis (x_j = -b + j h).

    Off-grid values come from the closure when interp is "analytic-closure",
    otherwise from bicubic interpolation; both vanish outside the box.
    ``hermite`` optionally carries the expansion (basis, coeffs) the field was
    built from, which enables the fast route for T.
    """

    box_half: float
    n: int
    values: np.ndarray
    interp: str = "bicubic"
    closure: Closure | None = None
    hermite: tuple[HermiteBasis, np.ndarray] | None = None

    def __post_init__(self) -> None:
        if self.n % 2 or self.n < 2:
            raise ValueError("n must be a positive even integer")
        if not self.box_half > 0:
            raise ValueError("box_half must be positive")
        if self.interp not in ("bicubic", "analytic-closure"):
            raise ValueError(f"unknown interp tag {self.interp!r}")
        if self.interp == "analytic-closure" and self.closure is None:
            raise ValueError("analytic-closure fields need a closure")
        self.values = np.asarray(self.values, dtype=complex)
        if self.values.shape != (self.n, self.n):
            raise ValueError("values must be n x n")

    @property
    def h(self) -> float:
        return 2.0 * self.box_half / self.n

    @property
    def nodes(self) -> np.ndarray:
        return -self.box_half + self.h * np.arange(self.n)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.nodes, self.nodes, indexing="ij")

    @classmethod
    def from_function(cls, fn: Closure, box_half: float, n: int,
                      hermite: tuple[HermiteBasis, np.ndarray] | None = None) -> "GridField":
        xs = -box_half + (2.0 * box_half / n) * np.arange(n)
        X, Y = np.meshgrid(xs, xs, indexing="ij")
        return cls(box_half, n, fn(X, Y), "analytic-closure", fn, hermite)

    @classmethod
    def from_hermite(cls, basis: HermiteBasis, coeffs: np.ndarray, box_half: float,
                     n: int) -> "GridField":
        coeffs = np.asarray(coeffs, dtype=complex) * basis.mask
        xs = -box_half + (2.0 * box_half / n) * np.arange(n)
        vals = basis.on_tensor_grid(coeffs, xs, xs)
        closure = lambda x, y: basis.evaluate(coeffs, x, y)
        return cls(box_half, n, vals, "analytic-closure", closure, (basis, coeffs))

    def like(self, values: np.ndarray) -> "GridField":
        """Same geometry, new samples, bicubic interpolation."""
        return GridField(self.box_half, self.n, values)

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
        inside = (np.abs(x) <= self.box_half) & (np.abs(y) <= self.box_half)
        if self.closure is not None and self.interp == "analytic-closure":
            return np.where(inside, self.closure(x, y), 0.0)
        # fractional grid coordinates; mode constant zero-fills outside
        cx = (x + self.box_half) / self.h
        cy = (y + self.box_half) / self.h
        coords = np.stack([cx.ravel(), cy.ravel()])
        re = ndimage.map_coordinates(self.values.real, coords, order=3, mode="constant")
        im = ndimage.map_coordinates(self.values.imag, coords, order=3, mode="constant")
        return np.where(inside, (re + 1j * im).reshape(x.shape), 0.0)

    def sample_tensor(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Values on xs x ys, separable fast path for Hermite-backed fields."""
        if self.hermite is not None and self.interp == "analytic-closure":
            basis, coeffs = self.hermite
            return basis.on_tensor_grid(coeffs, xs, ys)
        X, Y = np.meshgrid(xs, ys, indexing="ij")
        return self.evaluate(X, Y)

    def coefficients(self, basis: HermiteBasis) -> np.ndarray:
        """Hermite coefficients in ``basis`` (exact for closures, trapezoid otherwise)."""
        if self.hermite is not None and self.hermite[0] == basis:
            return self.hermite[1]
        if self.hermite is not None and self.hermite[0].degree <= basis.degree:
            out = basis.zeros()
            d = self.hermite[0].degree
            out[:d, :d] = self.hermite[1]
            return out * basis.mask
        if self.closure is not None and self.interp == "analytic-closure":
            return basis.project_function(self.closure)
        return basis.project_grid(self.values, self.nodes, self.h)

    def inner(self, other: "GridField") -> complex:
        """<self, other> = int self * conj(other) by the grid rule."""
        return complex(np.sum(self.values * np.conj(other.values)) * self.h ** 2)

    def norm2(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.h ** 2))


@dataclass(frozen=True)
class QuadratureSpec:
    """Rule for the (z, lambda) integral, plus the basis size of the Hermite route.

    rule "gauss-legendre" uses the square [-z_radius, z_radius]^2;
    "gauss-legendre-mapped" maps each axis onto R by z = z_radius tan(pi u / 2),
    for slowly decaying data such as 1/|x|.
    """

    z_radius: float = 8.0
    z_nodes: int = 64
    lambda_nodes: int = 32
    rule: str = "gauss-legendre"
    hermite_degree: int = 24

    def __post_init__(self) -> None:
        if not self.z_radius > 0 or self.z_nodes < 2 or self.lambda_nodes < 2:
            raise ValueError("invalid quadrature spec")
        if self.rule not in ("gauss-legendre", "gauss-legendre-mapped"):
            raise ValueError(f"unknown rule {self.rule!r}")

    def z_rule(self) -> tuple[np.ndarray, np.ndarray]:
        u, w = np.polynomial.legendre.leggauss(self.z_nodes)
        if self.rule == "gauss-legendre":
            return self.z_radius * u, self.z_radius * w
        a = np.pi * u / 2
        return self.z_radius * np.tan(a), self.z_radius * (np.pi / 2) * w / np.cos(a) ** 2

    def lambda_rule(self) -> tuple[np.ndarray, np.ndarray]:
        return np.polynomial.legendre.leggauss(self.lambda_nodes)

    def basis(self) -> HermiteBasis:
        return HermiteBasis(self.hermite_degree)


DEFAULT_QUAD = QuadratureSpec()
REFINED_QUAD = QuadratureSpec(z_radius=9.0, z_nodes=96, lambda_nodes=48)


@dataclass(frozen=True)
class ConservedLedger:
    mass: float
    momentum: tuple[float, float]
    position: tuple[float, float]
    first_moment: float
    kinetic: float
    angular: float
    hamiltonian: float

    FIELDS = ("mass", "px", "py", "qx", "qy", "moment", "kinetic", "angular", "H")

    def as_row(self) -> list[float]:
        return [self.mass, *self.momentum, *self.position, self.first_moment,
                self.kinetic, self.angular, self.hamiltonian]


# ---------------------------------------------------------------- T

def t_apply_points(f: GridField, g: GridField, h: GridField, points: np.ndarray,
                   quad: QuadratureSpec = DEFAULT_QUAD, chunk: int = 4) -> np.ndarray:
    """Direct quadrature of T(f, g, h) at each row of ``points`` (m x 2)."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    z, wz = quad.z_rule()
    lam, wl = quad.lambda_rule()
    Z1, Z2, LAM = np.meshgrid(z, z, lam, indexing="ij")
    W = (wz[:, None, None] * wz[None, :, None] * wl[None, None, :]).ravel()
    Z1, Z2, LAM = Z1.ravel(), Z2.ravel(), LAM.ravel()
    px, py = -Z2 * LAM, Z1 * LAM  # lam z^perp
    out = np.empty(len(points), dtype=complex)
    for s in range(0, len(points), chunk):
        blk = points[s:s + chunk]
        ax, ay = blk[:, 0:1], blk[:, 1:2]
        fv = f.evaluate(ax + Z1, ay + Z2)
        gv = g.evaluate(ax + Z1 + px, ay + Z2 + py)
        hv = h.evaluate(ax + px, ay + py)
        out[s:s + chunk] = (fv * np.conj(gv) * hv) @ W
    return out


def t_apply(f: GridField, g: GridField, h: GridField, at: tuple[float, float],
            quad: QuadratureSpec = DEFAULT_QUAD) -> complex:
    """T(f, g, h) at a single point by direct quadrature."""
    return complex(t_apply_points(f, g, h, np.array([at]), quad)[0])


def t_apply_field(f: GridField, g: GridField, h: GridField,
                  quad: QuadratureSpec = DEFAULT_QUAD, method: Method = "direct") -> GridField:
    """T(f, g, h) at every node of f's grid.

    The defining integral over lam in [-1, 1] is not symmetric in f <-> h; the
    hermite route returns the symmetrization (T(f, g, h) + T(h, g, f)) / 2,
    which is the same thing whenever f = h (in particular for T(g, g, g)).
    """
    if method == "hermite":
        basis = quad.basis()
        coeffs = basis.trilinear(f.coefficients(basis), g.coefficients(basis),
                                 h.coefficients(basis))
        return GridField.from_hermite(basis, coeffs, f.box_half, f.n)
    X, Y = f.mesh()
    pts = np.stack([X.ravel(), Y.ravel()], axis=1)
    vals = t_apply_points(f, g, h, pts, quad).reshape(f.n, f.n)
    return f.like(vals)


def gaussian_field(box_half: float | None = None, n: int = 64) -> GridField:
    b = self_dual_box(n) if box_half is None else box_half
    basis = HermiteBasis(1)
    return GridField.from_function(gaussian, b, n, (basis, np.ones((1, 1), complex)))


def gaussian_omega0(quad: QuadratureSpec = REFINED_QUAD) -> float:
    """T(G, G, G)(0) / G(0) by direct quadrature (reference value pi/2)."""
    G = gaussian_field(12.0, 16)
    return float(np.real(t_apply(G, G, G, (0.0, 0.0), quad)) * SQRT_PI)


# ---------------------------------------------------------------- Hamiltonian

def hamiltonian_quadruple(f: GridField, quad: QuadratureSpec = DEFAULT_QUAD,
                          method: Method = "hermite") -> float:
    """H(f) = 1/4 Re <T(f, f, f), f>."""
    if method == "hermite":
        basis = quad.basis()
        return basis.hamiltonian(f.coefficients(basis))
    tf = t_apply_field(f, f, f, quad, "direct")
    return 0.25 * float(np.real(tf.inner(f)))


def hamiltonian_sphere_form(f: GridField, angle_nodes: int = 64,
                            spacing: float | None = None) -> float:
    """(1/16) int_{S^1} int int |int f(u w + s w') conj f(t w + s w') ds|^2 du dt dw.

    Every angle contributes a squared Frobenius norm, so the result is >= 0.
    Angles w and w + pi give equal contributions; we integrate over [0, pi).
    """
    hs = f.h if spacing is None else spacing
    reach = f.box_half * math.sqrt(2.0)
    m = int(math.ceil(reach / hs))
    line = hs * np.arange(-m, m + 1)
    U, S = np.meshgrid(line, line, indexing="ij")
    total = 0.0
    for k in range(angle_nodes):
        th = math.pi * k / angle_nodes
        c, s = math.cos(th), math.sin(th)
        F = f.evaluate(U * c - S * s, U * s + S * c)  # f(u w + s w^perp)
        gram = (F @ F.conj().T) * hs
        total += float(np.sum(np.abs(gram) ** 2)) * hs * hs
    return 2.0 * (math.pi / angle_nodes) * total / 16.0


def _strichartz_profile(f: GridField, time_window: float, oversample: float = 1.15):
    rho = f.box_half
    dxi = 2 * math.pi / (oversample * 2 * (2 * time_window * rho + rho))
    dxi = min(dxi, f.h / 2)
    m = int(math.ceil(rho / dxi))
    n = int(sfft.next_fast_len(2 * m))
    xi = dxi * (np.arange(n) - n // 2)
    vals = f.sample_tensor(xi, xi)
    return xi, dxi, n, vals


def hamiltonian_strichartz_form(f: GridField, time_window: float = 10.0, time_nodes: int = 64,
                                tail_tol: float = 0.05) -> float:
    """(pi/2) int_R int_{R^2} |e^{it Delta} f^|^4 dx dt.

    The window [-T, T] is integrated in theta = atan(2t) by Gauss-Legendre and
    the two tails |t| > T are added from the far-field asymptotics
    int |u|^4 dx ~ int |f|^4 / (4 t^2), scaled by the ratio actually observed
    at t = +-T.  A warning is raised when that ratio strays from 1 by more than
    ``tail_tol``.
    """
    xi, dxi, n, vals = _strichartz_profile(f, time_window)
    XI2 = xi[:, None] ** 2 + xi[None, :] ** 2
    dx = 2 * math.pi / (n * dxi)
    scale = dxi * dxi * n * n / (2 * math.pi)

    def l4(t: float) -> float:
        u = sfft.ifft2(vals * np.exp(-1j * t * XI2), workers=-1) * scale
        return float(np.sum(np.abs(u) ** 4) * dx * dx)

    th_w = math.atan(2 * time_window)
    u, w = np.polynomial.legendre.leggauss(time_nodes)
    total = 0.0
    for ui, wi in zip(u, w):
        th = th_w * ui
        t = math.tan(th) / 2
        total += wi * th_w * l4(t) / (2 * math.cos(th) ** 2)
    a4 = float(np.sum(np.abs(vals) ** 4) * dxi * dxi)
    if a4 > 0:
        for t_end in (-time_window, time_window):
            ratio = 4 * t_end * t_end * l4(t_end) / a4
            if abs(ratio - 1) > tail_tol:
                warnings.warn(f"Strichartz tail ratio {ratio:.3f} at t={t_end}; widen the window",
                              RuntimeWarning, stacklevel=2)
            total += a4 * ratio / (4 * time_window)
    return math.pi / 2 * total


# ---------------------------------------------------------------- ledger, Fourier, norms

def _wavenumbers(f: GridField) -> np.ndarray:
    return 2 * np.pi * np.fft.fftfreq(f.n, d=f.h)


def gradient(f: GridField) -> tuple[np.ndarray, np.ndarray]:
    """Spectral derivatives (d/dx, d/dy) on the periodic grid."""
    k = _wavenumbers(f)
    fh = sfft.fft2(f.values)
    dx = sfft.ifft2(1j * k[:, None] * fh)
    dy = sfft.ifft2(1j * k[None, :] * fh)
    return dx, dy


def conserved(f: GridField, quad: QuadratureSpec = DEFAULT_QUAD,
              hamiltonian: float | None = None) -> ConservedLedger:
    X, Y = f.mesh()
    w = f.h ** 2
    v = f.values
    dens = np.abs(v) ** 2
    dx, dy = gradient(f)
    mom_x = float(np.real(np.sum(np.conj(v) * (-1j) * dx)) * w)
    mom_y = float(np.real(np.sum(np.conj(v) * (-1j) * dy)) * w)
    ang = float(np.real(1j * np.sum((X * dy - Y * dx) * np.conj(v))) * w)
    H = hamiltonian_quadruple(f, quad) if hamiltonian is None else hamiltonian
    return ConservedLedger(
        mass=float(np.sum(dens) * w),
        momentum=(mom_x, mom_y),
        position=(float(np.sum(X * dens) * w), float(np.sum(Y * dens) * w)),
        first_moment=float(np.sum((X * X + Y * Y) * dens) * w),
        kinetic=float(np.sum(np.abs(dx) ** 2 + np.abs(dy) ** 2) * w),
        angular=ang,
        hamiltonian=H,
    )


def _dft_phase(n: int) -> np.ndarray:
    return (-1.0) ** np.arange(n)


def fourier(f: GridField) -> GridField:
    """Unitary transform (2 pi)^{-1} int e^{-i x.xi} f(x) dx sampled on the dual grid.

    The dual grid has half-width pi / h and the same n; for the self-dual box it
    coincides with the input grid.  Plancherel holds exactly on the grid.
    """
    n, h = f.n, f.h
    s = _dft_phase(n)
    ss = s[:, None] * s[None, :]
    # x_j xi_k = pi (n/2 - j - k) + 2 pi j k / n per axis; the (-1)^{n/2} factors square away
    vals = sfft.fft2(f.values * ss) * ss * (h * h / (2 * np.pi))
    return GridField(math.pi / h, n, vals)


def x_sigma_norm(f: GridField, sigma: float) -> float:
    X, Y = f.mesh()
    return float(np.max((1 + X * X + Y * Y) ** (sigma / 2) * np.abs(f.values)))


# ---------------------------------------------------------------- catalog

def inverse_x_closure(r0: float) -> Closure:
    def fn(x, y):
        r = np.hypot(x, y)
        return np.where(r >= r0, 1.0 / np.maximum(r, r0), 0.0) + 0j
    return fn


INVERSE_X_QUAD = QuadratureSpec(z_radius=1.0, z_nodes=160, lambda_nodes=48,
                                rule="gauss-legendre-mapped")


@dataclass
class CatalogEntry:
    name: str
    field: GridField
    rate: float
    probe: tuple[float, float]


def catalog_solution(name: str, box_half: float | None = None, n: int = 64,
                     quad: QuadratureSpec = DEFAULT_QUAD) -> CatalogEntry:
    """Stationary profile with its rotation rate T(f,f,f)/f measured at a probe point."""
    b = self_dual_box(n) if box_half is None else box_half
    basis = HermiteBasis(3)
    coeffs = basis.zeros()
    if name == "gaussian":
        coeffs[0, 0] = 1.0
    elif name == "hermite_e4":
        coeffs[1, 0] = 1.0  # h1(x) h0(y) = sqrt2 x1 G
    elif name == "hermite_e6_radial":
        # (|x|^2 - 1) G = (h2(x) h0(y) + h0(x) h2(y)) / sqrt2
        coeffs[2, 0] = coeffs[0, 2] = 1 / math.sqrt(2)
    elif name == "inverse_x":
        h = 2 * b / n
        fld = GridField.from_function(inverse_x_closure(2 * h), b, n)
        probe = (1.0, 0.0)
        val = t_apply(fld, fld, fld, probe, INVERSE_X_QUAD)
        return CatalogEntry(name, fld, float(np.real(val)), probe)  # 1/|probe| = 1
    else:
        raise ValueError(f"unknown catalog profile {name!r}")
    fld = GridField.from_hermite(basis, coeffs, b, n)
    probe = (0.9, 0.35)
    val = t_apply(fld, fld, fld, probe, quad)
    rate = float(np.real(val / fld.evaluate(np.array(probe[0]), np.array(probe[1]))))
    return CatalogEntry(name, fld, rate, probe)


def random_field(seed: int, max_level: int = 6, box_half: float | None = None, n: int = 64,
                 decay: float = 0.35, basis_degree: int = 24) -> GridField:
    """Mass-one random Hermite combination supported on levels n + m < max_level."""
    rng = np.random.default_rng(seed)
    basis = HermiteBasis(basis_degree)
    amp = np.exp(-decay * basis.level) * (basis.level < max_level)
    c = (rng.normal(size=amp.shape) + 1j * rng.normal(size=amp.shape)) * amp
    c /= math.sqrt(basis.mass(c))
    b = self_dual_box(n) if box_half is None else box_half
    return GridField.from_hermite(basis, c, b, n)
