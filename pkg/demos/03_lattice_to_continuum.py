"""The lattice resonant operator approaches the continuum one, slowly.

T_L sums over rectangles on Z^2/L and is normalized so that it converges to T
as L grows.  The gap shrinks only like 1/log L: doubling L buys little, but
gap * log L stays put, which is what the table shows.
"""

import math

from crbox.cr_operator import gaussian_field
from crbox.lattice_resonance import LatticeParams
from crbox.nls_bridge import tl_vs_t_gap

G = gaussian_field()
print("   L     gap    gap*log L")
for L in (8, 16, 32, 64, 128):
    gap = tl_vs_t_gap(G, LatticeParams(L, 5.0, 2.0))
    print(f"{L:4d}  {gap:.4f}   {gap * math.log(L):.4f}")
