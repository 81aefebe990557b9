"""
Largest order for a given degree
================================

For each degree k, scan n downward for a connected integral circulant of
degree k.  The cap bounds the search; results at the cap are flagged.
"""

from integral_circulant import from_divisor_set
from integral_circulant.extremal import order_table
from integral_circulant.graph import is_connected
from integral_circulant.spectral import eigenvalues_numeric

for rec in order_table(11, cap=500):
    print(rec.as_dict())

# %% the degree-8 record: n = 60, classes of gcd 5 and gcd 6
rec = order_table(8, cap=500)[-1]
G = from_divisor_set(rec.witness)
vals = eigenvalues_numeric(G).values.real
print(G, "degree", G.degree, "connected", is_connected(G))
print("largest distance from an integer:", abs(vals - vals.round()).max())
