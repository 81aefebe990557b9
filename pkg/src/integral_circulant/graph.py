"""Circulant graphs G(n; S), gcd classes and the integrality decomposition.

Vertices are the residues 0..n-1 and {u, v} is an edge iff (u - v) mod n
lies in the symbol S.  A circulant graph is integral exactly when S is a
union of gcd classes G_n(d) = {1 <= k < n : gcd(k, n) = d}, so an integral
circulant is described by its set of class labels, a :class:`DivisorSet`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Iterator

import numpy as np

from .numtheory import divisors, euler_phi, gcd_all


@dataclass(frozen=True)
class SymbolSet:
    """Negation-closed subset of {1, ..., n-1}."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        members = tuple(sorted(set(self.members)))
        for s in members:
            if not 1 <= s <= self.n - 1:
                raise ValueError(f"symbol element {s} outside 1..{self.n - 1}")
        present = set(members)
        for s in members:
            if self.n - s not in present:
                raise ValueError(
                    f"symbol not closed under negation: {s} present, "
                    f"{self.n - s} absent mod {self.n}"
                )
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, s: int) -> bool:
        return s in self.as_set

    @cached_property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def mask(self) -> int:
        """Bitmask with bit s set for every member s."""
        m = 0
        for s in self.members:
            m |= 1 << s
        return m


@dataclass(frozen=True)
class DivisorSet:
    """Set of divisors d of n with d <= n/2, labelling gcd classes."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        members = tuple(sorted(set(self.members)))
        for d in members:
            if d < 1 or self.n % d:
                raise ValueError(f"{d} does not divide {self.n}")
            if 2 * d > self.n:
                raise ValueError(f"divisor {d} exceeds n/2 = {self.n / 2:g}")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    @property
    def dual(self) -> tuple[int, ...]:
        """The orders f = n/d, in the same order as ``members``."""
        return tuple(self.n // d for d in self.members)

    @property
    def degree(self) -> int:
        return sum(euler_phi(self.n // d) for d in self.members)

    @property
    def connected(self) -> bool:
        return self.n == 1 or gcd_all(self.members, self.n) == 1


@dataclass(frozen=True)
class CirculantGraph:
    n: int
    symbol: SymbolSet

    def __post_init__(self):
        if self.symbol.n != self.n:
            raise ValueError(f"symbol modulus {self.symbol.n} != graph order {self.n}")

    @classmethod
    def from_symbol(cls, n: int, symbol: Iterable[int]) -> CirculantGraph:
        return cls(n, SymbolSet(n, tuple(symbol)))

    @property
    def degree(self) -> int:
        return len(self.symbol)

    def neighbors(self, v: int) -> list[int]:
        return [(v + s) % self.n for s in self.symbol]

    def __repr__(self) -> str:
        return f"G({self.n}; {{{', '.join(map(str, self.symbol))}}})"


def divisor_candidates(n: int) -> tuple[int, ...]:
    """D_n: the tau(n) - 1 divisors of n that are at most n/2."""
    return tuple(d for d in divisors(n) if 2 * d <= n)


def gcd_class(n: int, d: int) -> SymbolSet:
    """G_n(d), the residues 1 <= k < n with gcd(k, n) = d."""
    if n < 2:
        raise ValueError(f"gcd classes need n >= 2, got {n}")
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide {n}")
    if 2 * d > n:
        raise ValueError(f"divisor {d} exceeds n/2")
    m = n // d
    return SymbolSet(n, tuple(d * u for u in range(1, m) if gcd(u, m) == 1))


def from_divisor_set(D: DivisorSet) -> CirculantGraph:
    members: list[int] = []
    for d in D:
        members.extend(gcd_class(D.n, d).members)
    return CirculantGraph.from_symbol(D.n, members)


def integrality_decomposition(G: CirculantGraph) -> DivisorSet | None:
    """Return the divisor set D with S equal to the union of G_n(d), d in D.

    Returns None when S is not a union of whole gcd classes, i.e. when the
    graph is not integral.
    """
    n = G.n
    labels = {gcd(s, n) for s in G.symbol}
    if sum(euler_phi(n // d) for d in labels) != G.degree:
        return None
    return DivisorSet(n, tuple(labels))


def is_integral(G: CirculantGraph) -> bool:
    return integrality_decomposition(G) is not None


def is_connected(G: CirculantGraph) -> bool:
    if G.n == 1:
        return True
    return gcd_all(G.symbol, G.n) == 1


def is_bipartite_bfs(G: CirculantGraph) -> bool:
    """Proper 2-colouring by breadth-first layering, component by component.

    An edgeless graph counts as bipartite.
    """
    color = [-1] * G.n
    for root in range(G.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in G.neighbors(u):
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def adjacency_row(G: CirculantGraph, i: int) -> np.ndarray:
    """Row ``i`` of the adjacency matrix as a 0/1 vector."""
    if not 0 <= i < G.n:
        raise IndexError(f"vertex {i} out of range for n = {G.n}")
    row = np.zeros(G.n, dtype=np.int8)
    if G.degree:
        row[(np.fromiter(G.symbol, dtype=np.int64) + i) % G.n] = 1
    return row


def adjacency_rows(G: CirculantGraph) -> Iterator[np.ndarray]:
    for i in range(G.n):
        yield adjacency_row(G, i)


def adjacency_matrix(G: CirculantGraph) -> np.ndarray:
    """Dense adjacency matrix; meant for small n and cross-checks."""
    return np.stack(list(adjacency_rows(G))) if G.n else np.zeros((0, 0), np.int8)


def negation_closed_symbols(n: int) -> Iterator[SymbolSet]:
    """Every negation-closed symbol mod n, including the empty one."""
    pairs = [(s, n - s) if s != n - s else (s,) for s in range(1, n // 2 + 1)]
    for mask in range(1 << len(pairs)):
        members = []
        for i, pair in enumerate(pairs):
            if mask >> i & 1:
                members.extend(pair)
        yield SymbolSet(n, tuple(members))


def graph_summary(G: CirculantGraph) -> dict:
    D = integrality_decomposition(G)
    return {
        "n": G.n,
        "symbol": list(G.symbol.members),
        "divisor_set": list(D.members) if D is not None else None,
        "degree": G.degree,
        "connected": is_connected(G),
        "bipartite": is_bipartite_bfs(G),
    }
