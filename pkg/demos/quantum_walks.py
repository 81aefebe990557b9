"""
Quantum walks on integral circulants
====================================

Integer eigenvalues make U(t) = exp(-iAt) periodic, and every perfect state
transfer question at t = pi p / q reduces to comparing integers.
"""

import math

import numpy as np

from integral_circulant import CirculantGraph, DivisorSet, from_divisor_set
from integral_circulant.quantum import (
    RationalAngle,
    antipodal_criterion,
    evolution_operator,
    no_pst_odd_check,
    period,
    pst_search,
    scalar_distance,
    transfer_amplitude_exact,
)

# %% the 4-cycle sends vertex 0 to vertex 2 at t = pi/2
D = DivisorSet(4, (1,))
print(pst_search(D))
print(np.abs(evolution_operator(from_divisor_set(D), math.pi / 2)).round(12))
print(transfer_amplitude_exact(D, 0, 2, RationalAngle(1, 2)))

# %% the (-1)^l phase pattern holds only up to a global phase
t = RationalAngle(1, 2)
print("strict", antipodal_criterion(D, t), "relaxed", antipodal_criterion(D, t, relaxed=True))

# %% periods
for n, members in [(6, (1,)), (4, (1, 2)), (4, (1,)), (12, (1, 4))]:
    print(n, members, period(DivisorSet(n, members)))

# %% odd orders never transfer perfectly
for n in (9, 15, 21):
    r = no_pst_odd_check(n)
    print(n, r.graphs_checked, "graphs, ok:", r.ok)

# %% non-integral cycles come back close to scalar but never exactly
ts = np.linspace(1.0, 20 * math.pi, 10**4)
for n in (5, 7):
    d = scalar_distance(CirculantGraph.from_symbol(n, [1, n - 1]), ts)
    print(f"C_{n}: closest approach {d.min():.4f} at t = {ts[d.argmin()]:.2f}")
