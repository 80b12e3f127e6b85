"""Hermite-function machinery on R^2.

Functions are expanded in the tensor basis h_n(x) h_m(y) truncated to total
degree n + m < D.  The basis diagonalizes H = -Delta + |x|^2 (eigenvalue
2(n + m + 1)), which gives an exact, cheap route to the trilinear operator T
through the lens-transform identity

    T(f, g, h) = 2 pi * int_{-pi/4}^{pi/4} e^{i tau H} [F conj(G) K] d tau,
    F = e^{-i tau H} f, G = e^{-i tau H} g, K = e^{-i tau H} h.

Spatial products are integrated by Gauss-Hermite rules that are exact for the
truncated basis, and the tau integrand is a trigonometric polynomial of period
pi/2, so the trapezoid rule is exact as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from numpy.polynomial.hermite import hermgauss


def hermite_functions(x: np.ndarray, degree: int) -> np.ndarray:
    """Orthonormal Hermite functions h_0..h_{degree-1} at x, shape x.shape + (degree,)."""
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape + (degree,))
    out[..., 0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if degree > 1:
        out[..., 1] = np.sqrt(2.0) * x * out[..., 0]
    for n in range(1, degree - 1):
        out[..., n + 1] = (np.sqrt(2.0 / (n + 1)) * x * out[..., n]
                           - np.sqrt(n / (n + 1)) * out[..., n - 1])
    return out


def _plain_rule(q: int, scale: float) -> tuple[np.ndarray, np.ndarray]:
    # nodes/weights for int f(x) dx, exact when f = poly * exp(-scale x^2)
    y, w = hermgauss(q)
    s = np.sqrt(scale)
    return y / s, w * np.exp(y * y) / s


@dataclass(frozen=True)
class HermiteBasis:
    """Truncated tensor Hermite basis with total degree < ``degree``."""

    degree: int = 24
    tau_nodes: int | None = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("degree must be >= 1")

    @cached_property
    def level(self) -> np.ndarray:
        n = np.arange(self.degree)
        return n[:, None] + n[None, :]

    @cached_property
    def mask(self) -> np.ndarray:
        return self.level < self.degree

    @cached_property
    def eigenvalue(self) -> np.ndarray:
        return 2.0 * (self.level + 1)

    @cached_property
    def _product_rule(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        # four basis functions multiply to poly(4(D-1)) * exp(-2x^2)
        x, w = _plain_rule(2 * self.degree, 2.0)
        return x, w, hermite_functions(x, self.degree)

    @cached_property
    def _projection_rule(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        # f * h_n with f = poly * exp(-x^2/2) is poly * exp(-x^2)
        x, w = _plain_rule(2 * self.degree + 8, 1.0)
        return x, w, hermite_functions(x, self.degree)

    @cached_property
    def _taus(self) -> np.ndarray:
        nt = self.tau_nodes or 2 * self.degree
        return -np.pi / 4 + (np.pi / 2) * np.arange(nt) / nt

    def zeros(self) -> np.ndarray:
        return np.zeros((self.degree, self.degree), dtype=complex)

    def evaluate(self, coeffs: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Pointwise values of the expansion at (x, y) (broadcast arrays)."""
        x, y = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
        hx = hermite_functions(x.ravel(), self.degree)
        hy = hermite_functions(y.ravel(), self.degree)
        vals = np.einsum("pn,nm,pm->p", hx, coeffs * self.mask, hy, optimize=True)
        return vals.reshape(x.shape)

    def on_tensor_grid(self, coeffs: np.ndarray, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Values on the tensor grid xs x ys (first index runs over xs)."""
        hx = hermite_functions(xs, self.degree)
        hy = hermite_functions(ys, self.degree)
        return hx @ (coeffs * self.mask) @ hy.T

    def project_function(self, fn) -> np.ndarray:
        """Exact projection of a Gaussian-decaying closure fn(x, y)."""
        x, w, phi = self._projection_rule
        X, Y = np.meshgrid(x, x, indexing="ij")
        vals = fn(X, Y) * (w[:, None] * w[None, :])
        return (phi.T @ vals @ phi) * self.mask

    def project_grid(self, values: np.ndarray, xs: np.ndarray, h: float) -> np.ndarray:
        """Projection of uniform-grid samples by the trapezoid rule."""
        phi = hermite_functions(xs, self.degree)
        return (phi.T @ values @ phi) * (h * h) * self.mask

    def trilinear(self, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
        """Coefficients of (T(a, b, c) + T(c, b, a)) / 2, Galerkin-truncated to the basis.

        The lens formula is symmetric in a <-> c, so it reproduces the defining
        integral itself only on the diagonal a = c.
        """
        x, w, phi = self._product_rule
        taus = self._taus
        ph = np.exp(-1j * taus[:, None, None] * self.eigenvalue[None])
        m = self.mask
        fa = phi @ (a * m * ph) @ phi.T
        fb = fa if b is a else phi @ (b * m * ph) @ phi.T
        fc = fa if c is a else phi @ (c * m * ph) @ phi.T
        prod = fa * np.conj(fb) * fc * (w[:, None] * w[None, :])
        proj = phi.T @ prod @ phi
        out = np.sum(np.conj(ph) * proj, axis=0)
        return 2.0 * np.pi * (np.pi / 2) / len(taus) * out * m

    def cubic(self, a: np.ndarray) -> np.ndarray:
        return self.trilinear(a, a, a)

    def mass(self, coeffs: np.ndarray) -> float:
        return float(np.sum(np.abs(coeffs * self.mask) ** 2))

    def hamiltonian(self, coeffs: np.ndarray) -> float:
        """H = 1/4 Re <T(f,f,f), f> (orthonormal basis, Parseval)."""
        t = self.cubic(coeffs)
        return 0.25 * float(np.real(np.vdot(coeffs * self.mask, t)))

    def level_indices(self, k: int) -> list[tuple[int, int]]:
        """Basis index pairs spanning E_{2k}, ordered (k-1, 0), (k-2, 1), ..., (0, k-1)."""
        if k < 1 or k > self.degree:
            raise ValueError("level outside the truncated basis")
        return [(k - 1 - j, j) for j in range(k)]

    def level_projector(self, coeffs: np.ndarray, k: int) -> np.ndarray:
        return np.where(self.level == k - 1, coeffs, 0.0)

    def fourier(self, coeffs: np.ndarray) -> np.ndarray:
        """Unitary Fourier transform acts as (-i)^{n+m} on the basis."""
        return coeffs * (-1j) ** self.level * self.mask
