"""Eigenvalues of circulant graphs and the spectral classifications.

Eigenvalues are indexed by the character j = 0..n-1: the vector
v_j = (1, w^j, ..., w^{j(n-1)}) with w = exp(2 pi i / n) has eigenvalue
lambda_j = sum_{s in S} w^{js}.  For an integral circulant with divisor set D
the same values are the integers sum_{f in F} c_f(j), F = {n/d : d in D},
where c_f is the Ramanujan sum.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Sequence

import mpmath
import numpy as np

from .graph import CirculantGraph, DivisorSet
from .numtheory import ramanujan_sum

EQ_TOL = 1e-9
CLUSTER_TOL = 1e-7
FLOAT_DIGITS = 15


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in character-index order.

    ``exact`` spectra hold Python ints.  ``numeric`` spectra hold either a
    complex128 array (``digits == 15``) or, for high-precision evaluation, a
    tuple of real ``mpmath.mpf`` values carrying ``digits`` significant digits.
    """

    n: int
    values: Sequence
    variant: Literal["exact", "numeric"]
    digits: int | None = None

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_exact(self) -> bool:
        return self.variant == "exact"

    @property
    def real(self) -> list:
        if self.is_exact:
            return list(self.values)
        if isinstance(self.values, np.ndarray):
            return list(self.values.real)
        return list(self.values)

    def by_modulus(self) -> list:
        """Values sorted by non-increasing modulus (ties: larger value first)."""
        return sorted(self.real, key=lambda x: (-abs(x), -x))

    def distinct(self) -> list:
        """Distinct eigenvalues, ascending; numeric values clustered at 1e-7."""
        vals = sorted(self.real)
        if self.is_exact:
            return sorted(set(vals))
        out = []
        for v in vals:
            if not out or abs(v - out[-1]) > CLUSTER_TOL:
                out.append(v)
        return out

    def as_dict(self) -> dict:
        if self.is_exact:
            values = list(self.values)
        elif isinstance(self.values, np.ndarray):
            values = [[float(z.real), float(z.imag)] for z in self.values]
        else:
            values = [[float(x), 0.0] for x in self.values]
        return {"n": self.n, "variant": self.variant, "values": values}


@lru_cache(maxsize=256)
def _fixed_point_cosines(n: int, bits: int) -> tuple[int, ...]:
    with mpmath.workprec(bits + 32):
        scale = mpmath.mpf(2) ** bits
        return tuple(int(mpmath.nint(mpmath.cospi(mpmath.mpf(2 * m) / n) * scale)) for m in range(n))


def eigenvalues_numeric(G: CirculantGraph, dps: int | None = None) -> Spectrum:
    """Character sums lambda_j = sum_s w^{js}.

    With ``dps`` unset this is a complex128 evaluation.  With ``dps`` set the
    (real) eigenvalues are evaluated to roughly ``dps`` significant digits,
    which the rational-ratio probe needs.
    """
    n = G.n
    S = np.fromiter(G.symbol, dtype=np.int64, count=G.degree)
    if dps is None:
        roots = np.exp(2j * np.pi * np.arange(n) / n)
        if S.size == 0:
            values = np.zeros(n, dtype=complex)
        else:
            values = roots[np.outer(np.arange(n), S) % n].sum(axis=1)
        return Spectrum(n, values, "numeric", FLOAT_DIGITS)

    bits = int(dps * 3.33) + 16
    table = _fixed_point_cosines(n, bits)
    symbol = G.symbol.members
    half = [sum(table[j * s % n] for s in symbol) for j in range(n // 2 + 1)]
    ints = [half[min(j, n - j)] for j in range(n)]
    with mpmath.workprec(bits + 64):
        values = tuple(mpmath.ldexp(mpmath.mpf(v), -bits) for v in ints)
    return Spectrum(n, values, "numeric", dps)


def eigenvalues_exact(D: DivisorSet) -> Spectrum:
    F = D.dual
    return Spectrum(D.n, tuple(sum(ramanujan_sum(f, j) for f in F) for j in range(D.n)), "exact")


def ratio_condition(spec: Spectrum) -> bool:
    """Every ratio of eigenvalue differences is rational.

    For an exact (integer) spectrum this always holds; the check just makes
    sure the values really are integers.
    """
    if not spec.is_exact:
        raise ValueError("ratio_condition needs an exact spectrum")
    if not all(isinstance(v, (int, np.integer)) for v in spec.values):
        raise TypeError("exact spectrum holds non-integer values")
    return True


def _to_fraction(x) -> Fraction:
    if isinstance(x, mpmath.mpf):
        sign, man, exp, _ = x._mpf_  # man_exp drops the sign
        man = -int(man) if sign else int(man)
        return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2**-exp)
    return Fraction(float(x))


def _quadruples(m: int, seed: int, sample_size: int):
    """Index quadruples (i, j, r, s) over m distinct values with r < s."""
    pairs = list(itertools.combinations(range(m), 2))
    if m <= 16:
        for (r, s) in pairs:
            for (i, j) in pairs:
                yield i, j, r, s
        return
    rng = random.Random(seed)
    for _ in range(sample_size):
        r, s = rng.choice(pairs)
        i, j = rng.choice(pairs)
        yield i, j, r, s


def ratio_condition_numeric(
    spec: Spectrum,
    max_denominator: int = 10**6,
    *,
    tol: float | None = None,
    seed: int = 0,
    sample_size: int = 10**4,
) -> bool:
    """Heuristic test that all (l_i - l_j)/(l_r - l_s) are rational.

    Each ratio is replaced by its best rational approximation with denominator
    at most ``max_denominator``; the test fails as soon as one residual exceeds
    ``tol``.  A residual bound is only meaningful well below
    1/max_denominator**2, so ``tol`` defaults to 10**-(digits - 5) where
    ``digits`` is the working precision of the spectrum.  Feed a spectrum from
    ``eigenvalues_numeric(G, dps=...)`` when max_denominator is large.

    All quadruples of distinct values are checked when there are at most 16
    distinct values, otherwise a seeded sample of ``sample_size`` of them.
    This can refute rationality but never prove it.
    """
    if spec.is_exact:
        return ratio_condition(spec)
    if isinstance(spec.values, np.ndarray) and np.abs(spec.values.imag).max(initial=0.0) > EQ_TOL:
        raise ValueError("spectrum is not real")
    distinct = spec.distinct()
    if len(distinct) < 4:
        raise ValueError(f"need at least 4 distinct eigenvalues, got {len(distinct)}")
    digits = spec.digits or FLOAT_DIGITS
    limit = Fraction(10) ** -(digits - 5) if tol is None else Fraction(tol)
    vals = [_to_fraction(v) for v in distinct]
    for i, j, r, s in _quadruples(len(vals), seed, sample_size):
        x = (vals[i] - vals[j]) / (vals[r] - vals[s])
        if abs(x - x.limit_denominator(max_denominator)) > limit:
            return False
    return True


def is_bipartite_spectral(spec: Spectrum, k: int) -> bool:
    """A connected k-regular graph is bipartite iff -k is an eigenvalue."""
    if spec.is_exact:
        return -k in spec.values
    return any(abs(v + k) <= EQ_TOL for v in spec.real)


def bipartite_divisor_test(n: int, D: DivisorSet) -> int | None:
    """Smallest l0 in 0..n-1 with 2*l0/f an odd integer for every f = n/d.

    None when n is odd or no such l0 exists.
    """
    if D.n != n:
        raise ValueError(f"divisor set modulus {D.n} != {n}")
    if n % 2:
        return None
    F = D.dual
    for l0 in range(n):
        if all((2 * l0) % f == 0 and (2 * l0 // f) % 2 == 1 for f in F):
            return l0
    return None
