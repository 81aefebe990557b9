"""Diameters of circulant graphs.

Vertex 0 reaches exactly the residues of iT in at most i steps, where
T = S + {0}, so the diameter is the least i with iT = Z_n.  Residue sets are
Python ints used as bitsets; adding a constant is a cyclic bit rotation.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .graph import CirculantGraph, DivisorSet, from_divisor_set
from .numtheory import gcd_all, is_prime

INFINITE = math.inf


@dataclass(frozen=True)
class ResidueSet:
    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> ResidueSet:
        mask = 0
        for x in members:
            mask |= 1 << (x % n)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> ResidueSet:
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> (x % self.n) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(_bits(self.mask))

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _rotate(mask: int, shift: int, n: int, full: int) -> int:
    """Add ``shift`` to every residue of ``mask``."""
    return ((mask << shift) | (mask >> (n - shift))) & full


def _add(xmask: int, ymask: int, n: int) -> int:
    full = (1 << n) - 1
    if xmask.bit_count() > ymask.bit_count():
        xmask, ymask = ymask, xmask
    out = 0
    for x in _bits(xmask):
        out |= _rotate(ymask, x, n, full)
    return out


def sumset(X: ResidueSet, Y: ResidueSet) -> ResidueSet:
    if X.n != Y.n:
        raise ValueError(f"modulus mismatch: {X.n} vs {Y.n}")
    return ResidueSet(X.n, _add(X.mask, Y.mask, X.n))


def sumset_iterates(G: CirculantGraph) -> Iterator[ResidueSet]:
    """T, 2T, 3T, ... up to and including the first repeated set."""
    n = G.n
    T = G.symbol.mask | 1
    cur = T
    yield ResidueSet(n, cur)
    while True:
        nxt = _add(cur, T, n)
        yield ResidueSet(n, nxt)
        if nxt == cur:
            return
        cur = nxt


def diameter_sumset(G: CirculantGraph) -> int | float:
    """Least i with iT = Z_n; ``math.inf`` for a disconnected graph."""
    n = G.n
    full = (1 << n) - 1
    T = G.symbol.mask | 1
    if n == 1:
        return 0
    cur, i = T, 1
    while cur != full:
        nxt = _add(cur, T, n)
        if nxt == cur:
            return INFINITE
        cur, i = nxt, i + 1
    return i


def diameter_bfs(G: CirculantGraph) -> int | float:
    """Eccentricity of vertex 0 by breadth-first search.

    Circulants are vertex-transitive, so this is the diameter.
    """
    n = G.n
    full = (1 << n) - 1
    row0 = G.symbol.mask
    dist = {0: 0}
    seen = 1
    queue = deque([0])
    far = 0
    while queue:
        u = queue.popleft()
        fresh = _rotate(row0, u, n, full) & ~seen
        if not fresh:
            continue
        seen |= fresh
        du = dist[u] + 1
        for v in _bits(fresh):
            dist[v] = du
            queue.append(v)
        far = du
    return far if seen == full else INFINITE


def generator_number(D: DivisorSet) -> int:
    """Size of the smallest E in D with gcd(E, n) = 1."""
    if gcd_all(D.members, D.n) != 1:
        raise ValueError(f"divisors {list(D.members)} do not generate Z_{D.n}")
    if D.n == 1:
        return 0
    for size in range(1, len(D) + 1):
        for E in combinations(D.members, size):
            if gcd_all(E, D.n) == 1:
                return size
    raise AssertionError("unreachable: the full set generates")


@dataclass(frozen=True)
class DiameterReport:
    n: int
    divisor_set: DivisorSet
    diameter: int | float
    generator_number_t: int
    lower_ok: bool
    upper_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok

    def as_dict(self) -> dict:
        diam = None if self.diameter == INFINITE else int(self.diameter)
        return {
            "n": self.n,
            "D": list(self.divisor_set.members),
            "diameter": diam,
            "t": self.generator_number_t,
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
        }


def check_diameter_bounds(D: DivisorSet) -> DiameterReport:
    """Diameter, generator number t, and whether t <= diam <= 2t + 1."""
    t = generator_number(D)
    diam = diameter_sumset(from_divisor_set(D))
    return DiameterReport(D.n, D, diam, t, t <= diam, diam <= 2 * t + 1)


def _check_odd_primes(primes: Iterable[int]) -> list[int]:
    ps = list(primes)
    if len(set(ps)) != len(ps):
        raise ValueError(f"repeated primes in {ps}")
    for p in ps:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p == 2:
            raise ValueError("primes must be odd")
    return ps


def family_diam2(primes: Iterable[int]) -> DivisorSet:
    """n = p_1 ... p_r, D = {p_1, ..., p_r}; diameter 2 when r >= 3."""
    ps = _check_odd_primes(primes)
    if len(ps) < 3:
        raise ValueError(f"the diameter-2 family requires r >= 3 primes, got r = {len(ps)}")
    return DivisorSet(math.prod(ps), tuple(ps))


def family_diam_2r_plus_1(primes: Iterable[int]) -> DivisorSet:
    """m = p_1 ... p_r, n = 2 m^2, D = {(m/p_i)^2}; diameter 2r + 1."""
    ps = _check_odd_primes(primes)
    if not ps:
        raise ValueError("need at least one prime")
    m = math.prod(ps)
    return DivisorSet(2 * m * m, tuple((m // p) ** 2 for p in ps))
