"""
Diameter by sumset iteration
============================

With T = S + {0}, the diameter is the first i for which iT covers Z_n.
"""

from integral_circulant import from_divisor_set
from integral_circulant.diameter import (
    check_diameter_bounds,
    diameter_bfs,
    family_diam2,
    family_diam_2r_plus_1,
    sumset_iterates,
)

# %% growth of iT for n = 450, D = {9, 25}
G = from_divisor_set(family_diam_2r_plus_1((3, 5)))
for i, X in enumerate(sumset_iterates(G), start=1):
    print(f"{i}T covers {len(X):>3} of {G.n}")

# %% the generator number t brackets the diameter: t <= diam <= 2t + 1
for D in [family_diam2((3, 5, 7)), family_diam2((3, 5, 7, 11)), family_diam_2r_plus_1((3,)), family_diam_2r_plus_1((3, 5))]:
    print(check_diameter_bounds(D).as_dict())

# %% both ends are reached; the largest instance still runs in well under a second
D = family_diam_2r_plus_1((3, 5, 7))
print(D.n, D.members, diameter_bfs(from_divisor_set(D)))
