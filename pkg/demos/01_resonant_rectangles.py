"""Resonant quadruples on a square lattice are rectangles.

We pick a centre K, list the tuples (K1, K2, K3) with K1 - K2 + K3 = K and
|K1|^2 - |K2|^2 + |K3|^2 = |K|^2, and check that each one closes a rectangle
with a right angle at K.  Then we count visible lattice points, whose density
6/pi^2 sets the normalization of the lattice operator, and end with the flat
data Strichartz sums that grow like N^2 log N.
"""

import math

from crbox.lattice_resonance import (LatticeParams, density_scan, enumerate_resonant,
                                     flat_field, strichartz_sum)

params = LatticeParams(L=2, cutoff=2.0)
k = (1, 0)
tuples = list(enumerate_resonant(k, params))
print(f"{len(tuples)} resonant tuples at K = {k} (index units, L = {params.L})")
for t in tuples[:6]:
    n1, n3 = t.n1, t.n3
    print(f"  K1={t.k1} K2={t.k2} K3={t.k3}  legs {n1} . {n3} = {n1[0] * n3[0] + n1[1] * n3[1]}")
assert all(t.n1[0] * t.n3[0] + t.n1[1] * t.n3[1] == 0 for t in tuples)

print("\nvisible density against 6/pi^2 =", round(6 / math.pi ** 2, 6))
for N, d, dev in density_scan([10, 100, 1000]):
    print(f"  N = {N:5d}  density {d:.6f}  zeta(2) d - 1 = {dev:+.2e}")

print("\nflat data: sum / (N^2 log N)")
for N in (4, 8, 16):
    phi = flat_field(N)
    s = strichartz_sum(phi, N)
    print(f"  N = {N:3d}  ratio {s / (N * N * math.log(N) * phi.values.size):.3f}")
