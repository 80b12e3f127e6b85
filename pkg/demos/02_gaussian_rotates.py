"""The Gaussian is a stationary state of the continuous resonant flow.

T(G, G, G) equals (pi/2) G, so the solution started at G only rotates its
phase at rate pi/2.  We check the eigen-relation on the grid, evaluate the
Hamiltonian (its value pi/8 is the largest among mass-one data), and run the
flow to t = 1 with the conservation ledger switched on.
"""

import math

import numpy as np

from crbox.cr_dynamics import Integrator, evolve
from crbox.cr_operator import (gaussian_field, hamiltonian_quadruple, random_field,
                               t_apply_field, x_sigma_norm)

G = gaussian_field()
TG = t_apply_field(G, G, G)
res = x_sigma_norm(TG.like(TG.values - math.pi / 2 * G.values), 2) / x_sigma_norm(G, 2)
print(f"||T(G) - (pi/2) G|| / ||G|| = {res:.2e}")

print(f"H(G) = {hamiltonian_quadruple(G):.6f}   pi/8 = {math.pi / 8:.6f}")
hs = [hamiltonian_quadruple(random_field(seed)) for seed in range(5)]
print("H of five mass-one random fields:", " ".join(f"{h:.4f}" for h in hs))

traj = evolve(G, 1.0, Integrator(dt=0.02))
centre = G.n // 2
phase = np.angle(traj.final.values[centre, centre] / G.values[centre, centre])
print(f"\nphase at the origin after t = 1: {phase:.6f} (pi/2 = {math.pi / 2:.6f})")
drift = traj.max_relative_drift()
print("worst relative ledger drift:", f"{drift.max():.1e}")
