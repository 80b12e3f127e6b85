"""Compiled inner loops for resonant lattice sums.

Fields are dense complex arrays of shape (2r+1, 2r+1) indexed by k + r and
vanish outside the ball |k|^2 <= r2.  Directions J are primitive vectors in the
canonical half-plane; a non-degenerate rectangle at k has legs
n1 = alpha J, n3 = beta J^perp with alpha, beta nonzero integers.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _rect_sum_at(e, f, g, r, r2, kx, ky, dirs):
    acc = 0j
    two_r = 2 * r
    for j in range(dirs.shape[0]):
        jx = dirs[j, 0]
        jy = dirs[j, 1]
        px = -jy
        py = jx
        for sa in (-1, 1):
            al = 1
            while abs(al * jx) <= two_r and abs(al * jy) <= two_r:
                x1 = kx + sa * al * jx
                y1 = ky + sa * al * jy
                if x1 * x1 + y1 * y1 <= r2:
                    ev = e[x1 + r, y1 + r]
                    if ev != 0:
                        for sb in (-1, 1):
                            be = 1
                            while abs(be * px) <= two_r and abs(be * py) <= two_r:
                                dx = sb * be * px
                                dy = sb * be * py
                                x3 = kx + dx
                                y3 = ky + dy
                                if x3 * x3 + y3 * y3 <= r2:
                                    x2 = x1 + dx
                                    y2 = y1 + dy
                                    if x2 * x2 + y2 * y2 <= r2:
                                        acc += ev * np.conj(f[x2 + r, y2 + r]) * g[x3 + r, y3 + r]
                                be += 1
                al += 1
    return acc


@njit(cache=True)
def rect_sum_points(e, f, g, r, r2, ks, dirs):
    """Unnormalized resonant sum over R(k) at the listed indices ks (m x 2)."""
    s_fg = 0j
    s_ef = 0j
    n = 2 * r + 1
    for a in range(n):
        for b in range(n):
            cf = np.conj(f[a, b])
            s_fg += cf * g[a, b]
            s_ef += e[a, b] * cf
    out = np.zeros(ks.shape[0], dtype=np.complex128)
    for i in range(ks.shape[0]):
        kx = ks[i, 0]
        ky = ks[i, 1]
        ek = e[kx + r, ky + r]
        gk = g[kx + r, ky + r]
        deg = ek * s_fg + gk * s_ef - ek * np.conj(f[kx + r, ky + r]) * gk
        out[i] = deg + _rect_sum_at(e, f, g, r, r2, kx, ky, dirs)
    return out


@njit(cache=True)
def phase_kick(w, c):
    """In place: w <- w * exp(i c |w|^2)."""
    n0, n1 = w.shape
    for i in range(n0):
        for j in range(n1):
            z = w[i, j]
            th = c * (z.real * z.real + z.imag * z.imag)
            w[i, j] = z * complex(np.cos(th), np.sin(th))


@njit(cache=True)
def primitive_perp_table(two_r):
    """For n in [-2r, 2r]^2, the primitive vector along n^perp = (-n_y, n_x)."""
    m = 2 * two_r + 1
    out = np.zeros((m, m, 2), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            x = a - two_r
            y = b - two_r
            u, v = abs(x), abs(y)
            while v:
                u, v = v, u % v
            if u:
                out[a, b, 0] = -y // u
                out[a, b, 1] = x // u
    return out


@njit(cache=True)
def _beta_range(cx, cy, px, py, r2):
    # integers beta with |c + beta p|^2 <= r2, as [lo, hi] (lo > hi if empty)
    pp = px * px + py * py
    cp = cx * px + cy * py
    cc = cx * cx + cy * cy
    disc = cp * cp - pp * (cc - r2)
    if disc < 0:
        return 1, 0
    s = np.sqrt(float(disc))
    lo = int(np.floor((-cp - s) / pp)) - 1
    hi = int(np.ceil((-cp + s) / pp)) + 1
    while lo <= hi and (cx + lo * px) ** 2 + (cy + lo * py) ** 2 > r2:
        lo += 1
    while hi >= lo and (cx + hi * px) ** 2 + (cy + hi * py) ** 2 > r2:
        hi -= 1
    return lo, hi


@njit(cache=True)
def rect_sum_ball(e, f, g, r, r2, ks, perp):
    """Same sums as rect_sum_points, looping over K1 in the ball with exact beta ranges."""
    s_fg = 0j
    s_ef = 0j
    n = 2 * r + 1
    for a in range(n):
        for b in range(n):
            cf = np.conj(f[a, b])
            s_fg += cf * g[a, b]
            s_ef += e[a, b] * cf
    two_r = 2 * r
    out = np.zeros(ks.shape[0], dtype=np.complex128)
    for i in range(ks.shape[0]):
        kx = ks[i, 0]
        ky = ks[i, 1]
        ek = e[kx + r, ky + r]
        gk = g[kx + r, ky + r]
        acc = ek * s_fg + gk * s_ef - ek * np.conj(f[kx + r, ky + r]) * gk
        kk = kx * kx + ky * ky
        for x1 in range(-r, r + 1):
            for y1 in range(-r, r + 1):
                k1k1 = x1 * x1 + y1 * y1
                if k1k1 > r2:
                    continue
                ev = e[x1 + r, y1 + r]
                if ev == 0:
                    continue
                nx = x1 - kx
                ny = y1 - ky
                if nx == 0 and ny == 0:
                    continue
                px = perp[nx + two_r, ny + two_r, 0]
                py = perp[nx + two_r, ny + two_r, 1]
                # K1 . p = K . p, so the binding constraint is the farther point
                if k1k1 >= kk:
                    lo, hi = _beta_range(x1, y1, px, py, r2)
                else:
                    lo, hi = _beta_range(kx, ky, px, py, r2)
                part = 0j
                for be in range(lo, hi + 1):
                    if be == 0:
                        continue
                    dx = be * px
                    dy = be * py
                    part += np.conj(f[x1 + dx + r, y1 + dy + r]) * g[kx + dx + r, ky + dy + r]
                acc += ev * part
        out[i] = acc
    return out
