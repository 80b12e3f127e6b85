"""One-dimensional analogue: resonant reduction of 1D cubic NLS and its exact solution.

On the circle of length L write u(x) = L^{-1} sum_K a_K e^{2 pi i K x},
K in Z / L, for  -i d_t u + d_xx u = sign eps^2 |u|^2 u.  In 1D the resonant
quadruples are K2 in {K1, K3}, and the resonant profile equation reads

    d_t b_K = i sign eps^2 L^{-2} (2 S b_K - |b_K|^2 b_K),   S = sum |b_J|^2.

The gauge c_K = b_K e^{-2 i sign eps^2 L^{-2} S t} decouples the modes:
c_K(t) = c_K(0) e^{-i sign eps^2 L^{-2} |c_K(0)|^2 t}, which is the trace of the
continuum solution g(tau, xi) = g0(xi) e^{i tau |g0(xi)|^2} at
tau = -sign eps^2 L^{-2} t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.fft as sfft

from .nls_bridge import fft_size

FOUR_PI2 = 4.0 * math.pi ** 2


@dataclass
class Line1DField:
    """Samples xi -> g(xi) on a 1D grid; sigma is the decay weight of the sup norm."""

    xi: np.ndarray
    values: np.ndarray
    sigma: float = 2.0

    def __post_init__(self) -> None:
        self.xi = np.asarray(self.xi, dtype=float)
        self.values = np.asarray(self.values, dtype=complex)
        if self.xi.shape != self.values.shape:
            raise ValueError("xi and values must have the same shape")
        if self.sigma <= 1:
            raise ValueError("decay weight sigma must exceed 1")

    @classmethod
    def from_function(cls, fn: Callable[[np.ndarray], np.ndarray], xi: np.ndarray,
                      sigma: float = 2.0) -> "Line1DField":
        xi = np.asarray(xi, dtype=float)
        return cls(xi, fn(xi), sigma)

    def x_sigma_norm(self) -> float:
        return float(np.max((1 + self.xi ** 2) ** (self.sigma / 2) * np.abs(self.values)))


def onedim_exact(g0: Line1DField, t: float) -> Line1DField:
    """g(t, xi) = g0(xi) e^{i t |g0(xi)|^2}."""
    v = g0.values
    return Line1DField(g0.xi, v * np.exp(1j * t * np.abs(v) ** 2), g0.sigma)


# ---------------------------------------------------------------- lattice side

@dataclass
class Lattice1D:
    """Coefficients b_K on K = k / L for integer k in [-r, r]."""

    L: int
    values: np.ndarray

    @property
    def r(self) -> int:
        return (len(self.values) - 1) // 2

    @property
    def k(self) -> np.ndarray:
        return np.arange(-self.r, self.r + 1)

    @property
    def K(self) -> np.ndarray:
        return self.k / self.L

    @classmethod
    def trace(cls, fn: Callable[[np.ndarray], np.ndarray], L: int, cutoff: float) -> "Lattice1D":
        r = int(math.floor(cutoff * L + 1e-9))
        return cls(L, np.asarray(fn(np.arange(-r, r + 1) / L), dtype=complex))

    def mass(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2))


def resonant_sum_1d(b: np.ndarray) -> np.ndarray:
    """sum over K1 - K2 + K3 = K with K2 in {K1, K3} of b1 conj(b2) b3.

    Branch K2 = K1 forces K3 = K and branch K2 = K3 forces K1 = K; they share
    the tuple (K, K, K).
    """
    S = np.sum(np.abs(b) ** 2)
    return 2 * S * b - np.abs(b) ** 2 * b


def onedim_resonant_rhs(b: Lattice1D, eps: float, sign: int = 1) -> np.ndarray:
    return 1j * sign * eps ** 2 / b.L ** 2 * resonant_sum_1d(b.values)


def gauge_rate(b: Lattice1D, eps: float, sign: int = 1) -> float:
    return 2 * sign * eps ** 2 * b.mass() / b.L ** 2


def apply_gauge(b: Lattice1D, eps: float, t: float, sign: int = 1) -> Lattice1D:
    """c_K = b_K e^{-i rate t}; the mass S is the same for b and c."""
    return Lattice1D(b.L, b.values * np.exp(-1j * gauge_rate(b, eps, sign) * t))


def undo_gauge(c: Lattice1D, eps: float, t: float, sign: int = 1) -> Lattice1D:
    return apply_gauge(c, eps, -t, sign)


def onedim_resonant_evolve(b0: Lattice1D, eps: float, t: float, sign: int = 1,
                           method: str = "closed", dt: float | None = None) -> Lattice1D:
    """b(t) for the 1D resonant system, in closed form or by RK4."""
    if method == "closed":
        c0 = b0.values
        c = c0 * np.exp(-1j * sign * eps ** 2 / b0.L ** 2 * np.abs(c0) ** 2 * t)
        return undo_gauge(Lattice1D(b0.L, c), eps, t, sign)
    if method != "rk4":
        raise ValueError(f"unknown method {method!r}")
    rate = eps ** 2 / b0.L ** 2 * (2 * b0.mass() + np.max(np.abs(b0.values)) ** 2)
    dt = dt or 0.05 / max(rate, 1e-300)
    nsteps = max(1, int(math.ceil(abs(t) / dt)))
    h = t / nsteps
    b = b0.values.copy()
    f = lambda v: onedim_resonant_rhs(Lattice1D(b0.L, v), eps, sign)
    for _ in range(nsteps):
        k1 = f(b)
        k2 = f(b + 0.5 * h * k1)
        k3 = f(b + 0.5 * h * k2)
        k4 = f(b + h * k3)
        b = b + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return Lattice1D(b0.L, b)


def continuum_time(eps: float, L: int, t: float, sign: int = 1) -> float:
    """Continuum time tau matched to lattice time t."""
    return -sign * eps ** 2 / L ** 2 * t


def per_mode_gap(g0: Callable[[np.ndarray], np.ndarray], L: int, cutoff: float, eps: float,
                 t: float, sign: int = 1, method: str = "closed") -> float:
    """max_K |c_K(t) - g(tau, K)| for the gauged resonant solution with data g0(K)."""
    b0 = Lattice1D.trace(g0, L, cutoff)
    c = apply_gauge(onedim_resonant_evolve(b0, eps, t, sign, method), eps, t, sign)
    exact = onedim_exact(Line1DField(b0.K, b0.values), continuum_time(eps, L, t, sign))
    return float(np.max(np.abs(c.values - exact.values)))


def continuum_gap(g0: Callable[[np.ndarray], np.ndarray], L: int, tau: float,
                  cutoff: float = 6.0, fine: int = 4001) -> float:
    """sup over a fine xi grid of |interpolated lattice solution - g(tau, xi)|.

    The lattice solution is the gauged resonant flow from data g0(K) run to the
    lattice time matching tau (eps = 1, sign = -1 so tau and t have equal sign).
    """
    eps, sign = 1.0, -1
    t = tau * L ** 2
    b0 = Lattice1D.trace(g0, L, cutoff)
    c = apply_gauge(onedim_resonant_evolve(b0, eps, t, sign), eps, t, sign)
    xi = np.linspace(-cutoff * 0.95, cutoff * 0.95, fine)
    interp = np.interp(xi, c.K, c.values.real) + 1j * np.interp(xi, c.K, c.values.imag)
    exact = onedim_exact(Line1DField.from_function(g0, xi), tau).values
    return float(np.max(np.abs(interp - exact)))


# ---------------------------------------------------------------- 1D NLS leg

class SplitStep1D:
    """Strang splitting for 1D NLS on the circle of length L; state is a (FFT order)."""

    def __init__(self, L: int, n: int, eps: float, sign: int = 1):
        self.L, self.n, self.eps, self.sign = L, n, eps, sign
        self.k = np.fft.fftfreq(n, 1.0 / n).astype(np.int64)
        self.scale = n / L

    def run(self, a: np.ndarray, nsteps: int, dt: float) -> np.ndarray:
        ph = np.exp(1j * FOUR_PI2 * self.k ** 2 / self.L ** 2 * dt)
        c = self.sign * self.eps ** 2 * self.scale ** 2
        w = sfft.ifft(a)
        w = w * np.exp(0.5j * c * dt * np.abs(w) ** 2)
        for i in range(nsteps):
            w = sfft.ifft(sfft.fft(w) * ph)
            w = w * np.exp(1j * c * (dt if i < nsteps - 1 else dt / 2) * np.abs(w) ** 2)
        return sfft.fft(w)

    def embed(self, b: Lattice1D) -> np.ndarray:
        a = np.zeros(self.n, dtype=complex)
        a[b.k % self.n] = b.values
        return a

    def extract(self, a: np.ndarray, like: Lattice1D) -> Lattice1D:
        return Lattice1D(like.L, a[like.k % self.n])


def onedim_nls_profile(b0: Lattice1D, eps: float, t: float, sign: int = 1,
                       steps_per_period: int | None = None, periods_per_step: int = 1,
                       macro_steps: int = 16) -> Lattice1D:
    """Interaction profile of 1D NLS at time t (rounded to whole linear periods).

    Stroboscopic averaging: the profile sampled every linear period L^2/(2 pi)
    is advanced by RK4 on the measured slow field.  The common rotation at the
    gauge rate is taken out first (mass is conserved, so the rate is fixed) and
    restored exactly at the end; otherwise the macro step would have to
    resolve a phase growing like the mass, i.e. like L.
    """
    L = b0.L
    n = fft_size(4 * b0.r + 2)  # no cubic product from the ball wraps back into it
    # |L^2 Omega| = 2|n1 n3| <= 8 r^2 inside the ball; a Strang step samples the
    # phase, so P must exceed that or nonresonant tuples alias onto resonant ones
    P = steps_per_period or 8 * b0.r ** 2 + 2
    period = L * L / (2 * math.pi)
    solver = SplitStep1D(L, n, eps, sign)
    span = periods_per_step * period
    a = solver.embed(b0)
    rate = 2 * sign * eps ** 2 * float(np.sum(np.abs(a) ** 2)) / L ** 2
    back = np.exp(-1j * rate * span)
    field = lambda c: (solver.run(c, P * periods_per_step, period / P) * back - c) / span
    h = t / macro_steps
    for _ in range(macro_steps):
        k1 = field(a)
        k2 = field(a + 0.5 * h * k1)
        k3 = field(a + 0.5 * h * k2)
        k4 = field(a + h * k3)
        a = a + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return solver.extract(a * np.exp(1j * rate * t), b0)
