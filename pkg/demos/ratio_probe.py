"""
Rational eigenvalue ratios
==========================

Integral spectra have rational ratios (l_i - l_j)/(l_r - l_s).  A numeric
probe tries to refute that by rational reconstruction.  At denominator 10^6
the residuals must be judged far below 10^-12, so the eigenvalues are
computed with mpmath.
"""

from integral_circulant import CirculantGraph, DivisorSet, eigenvalues_numeric, from_divisor_set
from integral_circulant.spectral import ratio_condition_numeric

for G in [from_divisor_set(DivisorSet(12, (1,))), CirculantGraph.from_symbol(7, [1, 6]), CirculantGraph.from_symbol(9, [1, 2, 7, 8])]:
    spec = eigenvalues_numeric(G, dps=30)
    print(G, len(spec.distinct()), "distinct values, ratios look rational:", ratio_condition_numeric(spec))

# %% in double precision the same bound refutes nothing
G = CirculantGraph.from_symbol(7, [1, 6])
print("float64, tol 1e-6:", ratio_condition_numeric(eigenvalues_numeric(G), tol=1e-6))
