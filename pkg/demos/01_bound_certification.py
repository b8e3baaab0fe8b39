"""Why gamma = 1.569 is enough.

The run length of the coloring algorithm is controlled by the coefficients
Q_n of a tree generating function. They decay geometrically at rate
rho(gamma) = min_x phi(x)/x, so everything hinges on whether rho < 1.
"""
from __future__ import annotations

import numpy as np

from acyclic_coloring.bounds import base_q, gamma_threshold, phi_E, q_sequence, rho, weight_wk

gamma = 1.569
q = base_q(gamma)
print(f"q = 1 - exp(-1/gamma) = {q:.6f}")
print("weights w_k for k = 3..7:", np.round([weight_wk(gamma, k) for k in range(3, 8)], 6))

# phi(x)/x is convex-ish on (0, 1/q - 1): huge near 0, blows up at the pole
xs = np.linspace(0.05, 1 / q - 1.05, 8)
for x in xs:
    print(f"  x = {x:5.3f}   phi(x)/x = {phi_E(gamma, x) / x:8.5f}")

r, xstar = rho(gamma)
print(f"\nrho({gamma}) = {r:.8f} at x* = {xstar:.6f}")
print(f"rho(1.5)    = {rho(1.5)[0]:.6f}  (too few colors)")

g_star = gamma_threshold(1e-6)
print(f"smallest gamma with rho < 1: {g_star:.6f}, i.e. {2 + g_star:.5f} (Delta - 1) colors suffice")

# the coefficients really do sit under rho^n
qn = q_sequence(gamma, 40)
for n in (1, 5, 10, 20, 40):
    print(f"  Q_{n:<2d} = {qn[n]:.3e}   rho^n = {r**n:.3e}")
