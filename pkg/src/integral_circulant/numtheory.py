"""Exact elementary number theory used throughout the package.

Everything here works on plain Python integers.  Factorization is by trial
division, which is plenty for the orders handled elsewhere (n up to a few
times 10^4) and is correct up to 2**40.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from math import gcd, isqrt
from typing import Iterable

INT64_MAX = 2**63 - 1
FACTORIZE_LIMIT = 2**40


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"factorization of non-positive value {self.value}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1 or not is_prime(p):
                raise ValueError(f"malformed factor ({p}, {e})")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __int__(self) -> int:
        return self.value


def _check_positive(n: int) -> None:
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for p in range(3, isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` by trial division (``1 <= n <= 2**40``)."""
    _check_positive(n)
    if n > FACTORIZE_LIMIT:
        raise ValueError(f"{n} exceeds the trial-division limit 2**40")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


@lru_cache(maxsize=65536)
def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for p, _ in factorize(n).factors:
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=65536)
def moebius(n: int) -> int:
    _check_positive(n)
    fac = factorize(n).factors
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=65536)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of ``n`` in increasing order."""
    _check_positive(n)
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def num_divisors(n: int) -> int:
    _check_positive(n)
    out = 1
    for _, e in factorize(n).factors:
        out *= e + 1
    return out


@lru_cache(maxsize=65536)
def _ramanujan_core(f: int, g: int) -> int:
    h = f // g
    num = euler_phi(f) * moebius(h)
    den = euler_phi(h)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"phi({h}) does not divide phi({f})*mu({h})")
    return q


def ramanujan_sum(f: int, j: int) -> int:
    """Ramanujan sum c_f(j) = sum over x coprime to f of exp(2 pi i j x / f).

    Evaluated by the closed form phi(f) mu(f/g) / phi(f/g) with g = gcd(f, j).
    """
    _check_positive(f)
    if j < 0:
        raise ValueError(f"expected a nonnegative index, got {j}")
    return _ramanujan_core(f, gcd(f, j))


def gcd_all(values: Iterable[int], n: int) -> int:
    """gcd of ``n`` together with every element of ``values``."""
    return reduce(gcd, values, n)


def lcm_all(values: Iterable[int], limit: int = INT64_MAX) -> int:
    vals = list(values)
    if not vals:
        raise ValueError("lcm of an empty collection")
    out = 1
    for v in vals:
        _check_positive(v)
        out = out // gcd(out, v) * v
        if out > limit:
            raise OverflowError(f"lcm exceeds {limit}")
    return out
