"""Enumeration of connected integral circulants and the order-vs-degree search.

N(k) is the largest order of a connected integral circulant of degree k.  No
effective bound on N(k) is available, so every search runs below an explicit
cap and reports it.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .graph import DivisorSet, divisor_candidates
from .numtheory import euler_phi

DEFAULT_CAP = 500


def _subsets(n: int, max_degree: int | None):
    cands = divisor_candidates(n)
    weights = [euler_phi(n // d) for d in cands]

    def walk(start: int, chosen: list[int], deg: int, g: int):
        for i in range(start, len(cands)):
            d_deg = deg + weights[i]
            if max_degree is not None and d_deg > max_degree:
                continue
            chosen.append(cands[i])
            g2 = gcd(g, cands[i])
            yield tuple(chosen), d_deg, g2
            yield from walk(i + 1, chosen, d_deg, g2)
            chosen.pop()

    yield from walk(0, [], 0, n)


def enumerate_integral(n: int, max_degree: int | None = None) -> list[DivisorSet]:
    """Every nonempty D in D_n with gcd(D, n) = 1, in lexicographic order.

    Each set's degree is ``D.degree``.  With ``max_degree`` the walk skips
    any branch whose degree already exceeds it.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return [DivisorSet(n, ds) for ds, _, g in _subsets(n, max_degree) if g == 1]


def all_divisor_sets(n: int) -> list[DivisorSet]:
    """Every subset of D_n, connected or not, including the empty one."""
    return [DivisorSet(n, ())] + [DivisorSet(n, ds) for ds, _, _ in _subsets(n, None)]


def integral_of_degree(n: int, k: int) -> DivisorSet | None:
    """Lexicographically smallest connected D of order n and degree k."""
    for ds, deg, g in _subsets(n, k):
        if deg == k and g == 1:
            return DivisorSet(n, ds)
    return None


@dataclass(frozen=True)
class ExtremalRecord:
    degree_k: int
    max_order: int | None
    witness: DivisorSet | None
    cap: int

    @property
    def cap_limited(self) -> bool:
        """True when the maximum found sits at the cap itself."""
        return self.max_order == self.cap

    def as_dict(self) -> dict:
        return {
            "k": self.degree_k,
            "N": self.max_order,
            "n": self.witness.n if self.witness else None,
            "D": list(self.witness.members) if self.witness else None,
            "cap": self.cap,
        }


def max_order_for_degree(k: int, cap: int = DEFAULT_CAP) -> ExtremalRecord:
    if k < 2 or cap < 2:
        raise ValueError(f"need k >= 2 and cap >= 2, got k={k}, cap={cap}")
    for n in range(cap, 1, -1):
        D = integral_of_degree(n, k)
        if D is not None:
            return ExtremalRecord(k, n, D, cap)
    return ExtremalRecord(k, None, None, cap)


def _record(args: tuple[int, int]) -> ExtremalRecord:
    return max_order_for_degree(*args)


def order_table(kmax: int, cap: int = DEFAULT_CAP, jobs: int = 1) -> list[ExtremalRecord]:
    """Records for k = 2..kmax, in order of k."""
    if kmax < 2:
        raise ValueError(f"need kmax >= 2, got {kmax}")
    work = [(k, cap) for k in range(2, kmax + 1)]
    if jobs <= 1:
        return [_record(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_record, work))
