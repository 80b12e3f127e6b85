"""Discrete resonant machinery on the rescaled lattice Z^2_L = Z^2 / L.

Lattice points are handled through their integer index k = L K, so resonance
tests (L^2 Omega = 0) and level-set integrality checks are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

import numpy as np

from ._kernels import primitive_perp_table, rect_sum_ball

ZETA2 = math.pi ** 2 / 6
Index = tuple[int, int]


# ---------------------------------------------------------------- types

@dataclass(frozen=True)
class LatticeParams:
    """Box size L (integer), cutoff radius in frequency units, weight sigma."""

    L: int
    cutoff: float
    sigma: float = 3.0

    def __post_init__(self) -> None:
        if int(self.L) != self.L or self.L < 1:
            raise ValueError("L must be a positive integer")
        if not self.cutoff > 0:
            raise ValueError("cutoff must be positive")

    @property
    def r2(self) -> int:
        """Squared index radius: |k|^2 <= r2 iff |k / L| <= cutoff."""
        return int(math.floor(self.cutoff ** 2 * self.L ** 2 + 1e-9))

    @property
    def r(self) -> int:
        return math.isqrt(self.r2)

    def contains(self, k: Index) -> bool:
        return k[0] * k[0] + k[1] * k[1] <= self.r2


@dataclass(frozen=True)
class LevelSetKey:
    """Resonance defect mu; ``m`` is L^2 mu / 2 when that is an integer."""

    mu: float | Fraction
    m: int | None = None

    @staticmethod
    def for_lattice(mu: float | Fraction, L: int) -> "LevelSetKey":
        q = Fraction(mu) * L * L / 2
        return LevelSetKey(mu, int(q) if q.denominator == 1 else None)


@dataclass(frozen=True)
class ResonantTuple:
    """Rectangle (K, K1, K2, K3) in index units; K = k / L.

    Legs: n1 = K1 - K = alpha * J, n3 = K3 - K = beta * J^perp.  Degenerate
    tuples carry alpha = 0 or beta = 0 (J = (0, 0) for the zero rectangle).
    """

    L: int
    k: Index
    k1: Index
    k2: Index
    k3: Index
    alpha: int
    beta: int
    J: Index

    @property
    def n1(self) -> Index:
        return (self.k1[0] - self.k[0], self.k1[1] - self.k[1])

    @property
    def n3(self) -> Index:
        return (self.k3[0] - self.k[0], self.k3[1] - self.k[1])

    @property
    def omega_scaled(self) -> int:
        """L^2 Omega = |k1|^2 - |k2|^2 + |k3|^2 - |k|^2 (exact)."""
        sq = lambda p: p[0] * p[0] + p[1] * p[1]
        return sq(self.k1) - sq(self.k2) + sq(self.k3) - sq(self.k)

    def points(self) -> tuple[Index, Index, Index]:
        return (self.k1, self.k2, self.k3)


class LatticeField:
    """Complex sequence on the truncated lattice, stored densely.

    ``values[k0 + r, k1 + r]`` holds a_K for K = (k0, k1) / L; entries outside
    the cutoff ball are kept at zero.
    """

    def __init__(self, params: LatticeParams, values: np.ndarray | None = None):
        self.params = params
        r = params.r
        n = 2 * r + 1
        if values is None:
            values = np.zeros((n, n), dtype=complex)
        values = np.array(values, dtype=complex)
        if values.shape != (n, n):
            raise ValueError(f"expected shape {(n, n)}, got {values.shape}")
        values[~self.ball_mask(params)] = 0.0
        self.values = values

    @staticmethod
    def index_grid(params: LatticeParams) -> tuple[np.ndarray, np.ndarray]:
        k = np.arange(-params.r, params.r + 1)
        return np.meshgrid(k, k, indexing="ij")

    @staticmethod
    def ball_mask(params: LatticeParams) -> np.ndarray:
        kx, ky = LatticeField.index_grid(params)
        return kx * kx + ky * ky <= params.r2

    @classmethod
    def from_function(cls, fn: Callable[[np.ndarray, np.ndarray], np.ndarray],
                      params: LatticeParams) -> "LatticeField":
        """Trace K -> fn(K) of a function on R^2."""
        kx, ky = cls.index_grid(params)
        return cls(params, fn(kx / params.L, ky / params.L))

    @classmethod
    def from_dict(cls, params: LatticeParams, entries: dict[Index, complex]) -> "LatticeField":
        out = cls(params)
        for k, v in entries.items():
            if not params.contains(k):
                raise ValueError(f"index {k} lies outside the cutoff ball")
            out.values[k[0] + params.r, k[1] + params.r] = v
        return out

    def __getitem__(self, k: Index) -> complex:
        r = self.params.r
        if abs(k[0]) > r or abs(k[1]) > r:
            return 0j
        return complex(self.values[k[0] + r, k[1] + r])

    def to_dict(self) -> dict[Index, complex]:
        r = self.params.r
        ii, jj = np.nonzero(self.values)
        return {(int(i - r), int(j - r)): complex(self.values[i, j]) for i, j in zip(ii, jj)}

    def frequencies(self) -> tuple[np.ndarray, np.ndarray]:
        kx, ky = self.index_grid(self.params)
        return kx / self.params.L, ky / self.params.L

    def copy(self, values: np.ndarray | None = None) -> "LatticeField":
        return LatticeField(self.params, self.values.copy() if values is None else values)

    def __mul__(self, c: complex) -> "LatticeField":
        return LatticeField(self.params, self.values * c)

    __rmul__ = __mul__

    def __sub__(self, other: "LatticeField") -> "LatticeField":
        return LatticeField(self.params, self.values - other.values)

    def mass(self) -> float:
        """Sum of |a_K|^2 over the ball."""
        return float(np.sum(np.abs(self.values) ** 2))


# ---------------------------------------------------------------- number theory

def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    sign, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if n > 1 else sign


def mobius_sieve(n_max: int) -> np.ndarray:
    """mu(0..n_max) with mu(0) = 0, by a linear sieve."""
    mu = np.zeros(n_max + 1, dtype=np.int64)
    if n_max >= 1:
        mu[1] = 1
    composite = np.zeros(n_max + 1, dtype=bool)
    primes: list[int] = []
    for i in range(2, n_max + 1):
        if not composite[i]:
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if i * p > n_max:
                break
            composite[i * p] = True
            if i % p == 0:
                mu[i * p] = 0
                break
            mu[i * p] = -mu[i]
    return mu


def is_visible(p: int, q: int) -> bool:
    """Primitive lattice vector test; with p = 0 only q = +-1 qualifies."""
    if p == 0 and q == 0:
        raise ValueError("(0, 0) has no direction")
    return math.gcd(abs(p), abs(q)) == 1


def visible_count(N: int, mu: np.ndarray | None = None) -> int:
    """# visible points in [-N, N]^2 via Mobius inversion over the common divisor."""
    if mu is None:
        mu = mobius_sieve(N)
    d = np.arange(1, N + 1)
    m = N // d
    return int(np.sum(mu[1:N + 1] * ((2 * m + 1) ** 2 - 1)))


def visible_density(N: int) -> float:
    if N < 1:
        raise ValueError("N must be >= 1")
    return visible_count(N) / ((2 * N + 1) ** 2 - 1)


def density_scan(n_values: list[int]) -> list[tuple[int, float, float]]:
    """Rows (N, density, zeta(2) * density - 1)."""
    mu = mobius_sieve(max(n_values))
    rows = []
    for N in n_values:
        dens = visible_count(N, mu) / ((2 * N + 1) ** 2 - 1)
        rows.append((N, dens, ZETA2 * dens - 1.0))
    return rows


@lru_cache(maxsize=16)
def canonical_directions(radius: int) -> np.ndarray:
    """Visible J with |J| <= radius and first nonzero coordinate positive."""
    out = []
    r2 = radius * radius
    for p in range(0, radius + 1):
        for q in range(-radius, radius + 1):
            if p == 0 and q <= 0:
                continue
            if p * p + q * q <= r2 and math.gcd(p, abs(q)) == 1:
                out.append((p, q))
    return np.array(out, dtype=np.int64).reshape(-1, 2)


def _canonical(v: Index) -> tuple[Index, int]:
    """Split v != 0 as sign * multiplicity * J with J canonical."""
    g = math.gcd(abs(v[0]), abs(v[1]))
    J = (v[0] // g, v[1] // g)
    if J[0] < 0 or (J[0] == 0 and J[1] < 0):
        return (-J[0], -J[1]), -g
    return J, g


# ---------------------------------------------------------------- enumeration

def _check_k(k: Index, params: LatticeParams) -> None:
    if not params.contains(k):
        raise ValueError(f"K index {k} exceeds the cutoff")


def enumerate_resonant(k: Index, params: LatticeParams, include_degenerate: bool = True,
                       strict: bool = False) -> Iterator[ResonantTuple]:
    """All rectangles in R(K) with K, K1, K3 in the cutoff ball.

    ``strict`` additionally requires K2 in the ball.  Tuples come out sorted by
    (alpha, beta, J).  Non-degenerate ones are generated from the (alpha, beta,
    J) parametrization, so each rectangle appears once.
    """
    _check_k(k, params)
    L, r2 = params.L, params.r2
    rr = 2 * params.r
    inside = lambda p: p[0] * p[0] + p[1] * p[1] <= r2
    found: list[ResonantTuple] = []

    def emit(n1: Index, n3: Index, alpha: int, beta: int, J: Index) -> None:
        k1 = (k[0] + n1[0], k[1] + n1[1])
        k3 = (k[0] + n3[0], k[1] + n3[1])
        k2 = (k1[0] + n3[0], k1[1] + n3[1])
        if inside(k1) and inside(k3) and (not strict or inside(k2)):
            found.append(ResonantTuple(L, k, k1, k2, k3, alpha, beta, J))

    for J in canonical_directions(rr):
        jx, jy = int(J[0]), int(J[1])
        perp = (-jy, jx)
        amax = rr // max(abs(jx), abs(jy))
        for alpha in range(-amax, amax + 1):
            for beta in range(-amax, amax + 1):
                if alpha == 0 and beta == 0:
                    continue
                if not include_degenerate and (alpha == 0 or beta == 0):
                    continue
                emit((alpha * jx, alpha * jy), (beta * perp[0], beta * perp[1]),
                     alpha, beta, (jx, jy))
    if include_degenerate:
        emit((0, 0), (0, 0), 0, 0, (0, 0))
    found.sort(key=lambda t: (t.alpha, t.beta, t.J))
    return iter(found)


def enumerate_level_set(k: Index, key: LevelSetKey, params: LatticeParams,
                        strict: bool = False) -> Iterator[tuple[Index, Index, Index]]:
    """Tuples of R_mu(K): Omega = mu, i.e. n1 . n3 = -L^2 mu / 2 in index units."""
    _check_k(k, params)
    if key.m is None:
        key = LevelSetKey.for_lattice(key.mu, params.L)
    if key.m is None:
        return iter(())
    if key.m == 0:
        return (t.points() for t in enumerate_resonant(k, params, True, strict))
    target = -key.m
    r, r2 = params.r, params.r2
    ball = [(a, b) for a in range(-r, r + 1) for b in range(-r, r + 1) if a * a + b * b <= r2]
    out = []
    for k1 in ball:
        n1 = (k1[0] - k[0], k1[1] - k[1])
        for k3 in ball:
            n3 = (k3[0] - k[0], k3[1] - k[1])
            if n1[0] * n3[0] + n1[1] * n3[1] != target:
                continue
            k2 = (k1[0] + n3[0], k1[1] + n3[1])
            if strict and k2[0] * k2[0] + k2[1] * k2[1] > r2:
                continue
            out.append((k1, k2, k3))
    return iter(out)


def circle_lattice_count(center: Index, radius_sq: int, box_half: int) -> int:
    """# integer z with |z - center|^2 = radius_sq and max(|z_i|) <= box_half."""
    if radius_sq < 0:
        raise ValueError("radius_sq must be non-negative")
    count = 0
    a_max = math.isqrt(radius_sq)
    for a in range(-a_max, a_max + 1):
        rest = radius_sq - a * a
        b = math.isqrt(rest)
        if b * b != rest:
            continue
        for bb in {b, -b}:
            z = (center[0] + a, center[1] + bb)
            if abs(z[0]) <= box_half and abs(z[1]) <= box_half:
                count += 1
    return count


# ---------------------------------------------------------------- operators

@lru_cache(maxsize=4)
def _perp_table(two_r: int) -> np.ndarray:
    return primitive_perp_table(two_r)


def resonant_sum(e: LatticeField, f: LatticeField, g: LatticeField,
                 ks: np.ndarray | None = None) -> np.ndarray:
    """Unnormalized sum over R(K) of e_{K1} conj(f_{K2}) g_{K3}.

    Returns values at the listed indices ``ks`` (m x 2), or the full dense
    array over the ball when ks is None.
    """
    p = e.params
    if f.params != p or g.params != p:
        raise ValueError("fields must share lattice parameters")
    r = p.r
    perp = _perp_table(2 * r)
    if ks is None:
        kx, ky = LatticeField.index_grid(p)
        mask = kx * kx + ky * ky <= p.r2
        pts = np.stack([kx[mask], ky[mask]], axis=1).astype(np.int64)
        out = np.zeros_like(e.values)
        out[mask] = rect_sum_ball(e.values, f.values, g.values, r, p.r2, pts, perp)
        return out
    ks = np.asarray(ks, dtype=np.int64).reshape(-1, 2)
    for k in ks:
        _check_k((int(k[0]), int(k[1])), p)
    return rect_sum_ball(e.values, f.values, g.values, r, p.r2, ks, perp)


def tl_normalization(L: int) -> float:
    if L <= 1:
        raise ValueError("T_L needs L > 1 (log L > 0)")
    return ZETA2 / (2.0 * L * L * math.log(L))


def t_l_apply(e: LatticeField, f: LatticeField, g: LatticeField) -> LatticeField:
    """T_L(e, f, g) on the whole cutoff ball, degenerate rectangles included."""
    c = tl_normalization(e.params.L)
    return LatticeField(e.params, c * resonant_sum(e, f, g))


def t_l_at(e: LatticeField, f: LatticeField, g: LatticeField, ks: np.ndarray) -> np.ndarray:
    """T_L(e, f, g) at selected indices only."""
    return tl_normalization(e.params.L) * resonant_sum(e, f, g, ks)


def japanese(kx: np.ndarray, ky: np.ndarray) -> np.ndarray:
    return np.sqrt(1.0 + kx * kx + ky * ky)


def x_sigma_norm_lattice(a: LatticeField, sigma: float) -> float:
    if not np.any(a.values):
        return 0.0
    kx, ky = a.frequencies()
    return float(np.max(japanese(kx, ky) ** sigma * np.abs(a.values)))


def strichartz_sum(phi_hat: LatticeField, N: int) -> float:
    """Period average of ||e^{it Delta} phi||_{L^4(T^2)}^4 as a resonant sum (L = 1)."""
    p = phi_hat.params
    if p.L != 1:
        raise ValueError("strichartz_sum uses L = 1 semantics")
    kx, ky = LatticeField.index_grid(p)
    if np.any((kx * kx + ky * ky > 4 * N * N) & (phi_hat.values != 0)):
        raise ValueError("phi_hat must be supported in |k| <= 2N")
    s = resonant_sum(phi_hat, phi_hat, phi_hat)
    return float(np.real(np.vdot(phi_hat.values, s)))


def flat_field(N: int) -> LatticeField:
    """Indicator of the disc |k| <= N on Z^2."""
    p = LatticeParams(L=1, cutoff=float(N))
    return LatticeField(p, LatticeField.ball_mask(p).astype(complex))


def gaussian_trace(params: LatticeParams) -> LatticeField:
    """Trace of the mass-one Gaussian pi^{-1/2} exp(-|x|^2 / 2) on Z^2_L."""
    return LatticeField.from_function(
        lambda x, y: np.exp(-(x * x + y * y) / 2) / math.sqrt(math.pi), params)
