"""
Spectra of circulant graphs
===========================

A circulant is integral exactly when its symbol is a union of gcd classes.
"""

from integral_circulant import CirculantGraph, DivisorSet, eigenvalues_exact, eigenvalues_numeric, from_divisor_set
from integral_circulant.graph import integrality_decomposition, is_bipartite_bfs
from integral_circulant.spectral import bipartite_divisor_test, is_bipartite_spectral

# %% the hexagon: symbol {1, 5} is the class of residues coprime to 6
G = CirculantGraph.from_symbol(6, [1, 5])
D = integrality_decomposition(G)
print(G, "->", D)
print("exact  ", eigenvalues_exact(D).values)
print("numeric", eigenvalues_numeric(G).values.real.round(12))

# %% the pentagon is not a union of classes, and its spectrum shows it
C5 = CirculantGraph.from_symbol(5, [1, 4])
print(C5, "->", integrality_decomposition(C5))
print(eigenvalues_numeric(C5).values.real)

# %% three ways to ask whether an integral circulant is bipartite
for n, members in [(6, (1,)), (12, (1, 3)), (12, (1, 4)), (10, (1, 2))]:
    D = DivisorSet(n, members)
    G = from_divisor_set(D)
    print(
        f"n={n:>2} D={members}",
        is_bipartite_bfs(G),
        is_bipartite_spectral(eigenvalues_exact(D), D.degree),
        bipartite_divisor_test(n, D),
    )
