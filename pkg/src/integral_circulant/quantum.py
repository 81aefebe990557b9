"""Continuous-time quantum walks U(t) = exp(-i A t) on circulant graphs.

For integral graphs every certificate below is decided with integers: at a
time t = pi p / q the factor exp(-i lambda t) is exp(2 pi i * (-lambda p) / 2q),
and w^{l(a-b)} is exp(2 pi i * l(a-b) / n), so every phase is a residue
modulo L = lcm(2q, n) in units of 2 pi / L.  Floats only appear in the
reported moduli and in the dense evolution operator used for cross-checks.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .extremal import enumerate_integral
from .graph import CirculantGraph, DivisorSet, integrality_decomposition
from .spectral import Spectrum, eigenvalues_exact, eigenvalues_numeric

MAX_DENSE_ORDER = 512


@dataclass(frozen=True)
class RationalAngle:
    """The time t = pi * p / q, kept in lowest terms."""

    p: int
    q: int = 1

    def __post_init__(self):
        if self.q < 1:
            raise ValueError(f"denominator must be positive, got {self.q}")
        g = gcd(abs(self.p), self.q) or 1
        object.__setattr__(self, "p", self.p // g)
        object.__setattr__(self, "q", self.q // g)

    @classmethod
    def from_fraction(cls, x: Fraction | int) -> RationalAngle:
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @property
    def value(self) -> float:
        return math.pi * self.p / self.q

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        num = {1: "pi", -1: "-pi"}.get(self.p, f"{self.p}pi")
        return num if self.q == 1 else f"{num}/{self.q}"

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q}


@dataclass(frozen=True)
class PstWitness:
    a: int
    b: int
    time: RationalAngle
    fidelity: float = 1.0

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "t": self.time.as_dict()}


@dataclass(frozen=True)
class TransferAmplitude:
    unit: bool  # exact: |<a|U(t)|b>| == 1
    modulus: float


@dataclass(frozen=True)
class EvolutionReport:
    n: int
    divisor_set: DivisorSet | None
    symbol: tuple[int, ...]
    periodic: bool
    period: RationalAngle | None
    pst: PstWitness | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "D": list(self.divisor_set.members) if self.divisor_set is not None else None,
            "periodic": self.periodic,
            "period": self.period.as_dict() if self.period else None,
            "pst": self.pst.as_dict() if self.pst else None,
        }


def _spectrum_of(D: DivisorSet | Spectrum) -> Spectrum:
    if isinstance(D, Spectrum):
        if not D.is_exact:
            raise ValueError("exact phase arithmetic needs an integral spectrum")
        return D
    if not isinstance(D, DivisorSet):
        raise TypeError(f"expected a DivisorSet, got {type(D).__name__}")
    return eigenvalues_exact(D)


def evolution_operator(G: CirculantGraph, t: float) -> np.ndarray:
    """U(t) = (1/n) sum_j exp(-i lambda_j t) v_j v_j^dagger."""
    n = G.n
    if n > MAX_DENSE_ORDER:
        raise ValueError(f"dense evolution limited to n <= {MAX_DENSE_ORDER}, got {n}")
    lam = eigenvalues_numeric(G).values.real
    k = np.arange(n)
    V = np.exp(2j * np.pi * np.outer(k, k) / n)  # column j is v_j
    return (V * np.exp(-1j * lam * t)) @ V.conj().T / n


def _phases(lam: np.ndarray, n: int, shift: int, t: RationalAngle) -> tuple[np.ndarray, int]:
    L = math.lcm(2 * t.q, n)
    ell = np.arange(n, dtype=np.int64)
    ph = (-lam * t.p * (L // (2 * t.q)) + ell * shift * (L // n)) % L
    return ph, L


def transfer_amplitude_exact(D: DivisorSet | Spectrum, a: int, b: int, t: RationalAngle) -> TransferAmplitude:
    """|<a|U(t)|b>| for an integral circulant, with an exact unit-modulus test.

    The amplitude is the mean of n unit complex numbers, so its modulus is 1
    exactly when all of them share one phase.
    """
    spec = _spectrum_of(D)
    n = spec.n
    lam = np.asarray(spec.values, dtype=np.int64)
    ph, L = _phases(lam, n, (a - b) % n, t)
    unit = bool(np.all(ph == ph[0]))
    modulus = float(abs(np.exp(2j * np.pi * ph / L).sum()) / n)
    return TransferAmplitude(unit, modulus)


def phase_gap(spec: Spectrum) -> int:
    """gcd of all lambda_j - lambda_0; 0 when the spectrum is constant."""
    lam0 = spec.values[0]
    g = 0
    for v in spec.values:
        g = gcd(g, v - lam0)
    return g


def period(D: DivisorSet | Spectrum) -> RationalAngle:
    """Least t > 0 with U(t) a scalar multiple of the identity: t = 2 pi / g.

    A constant spectrum (a single vertex) makes every t a period; 2 pi is
    returned by convention with a warning.
    """
    spec = _spectrum_of(D)
    g = phase_gap(spec)
    if g == 0:
        warnings.warn("constant spectrum: period is degenerate, using 2pi", stacklevel=2)
        return RationalAngle(2, 1)
    return RationalAngle(2, g)


def scalar_certificate(D: DivisorSet | Spectrum, t: RationalAngle) -> bool:
    """Exactly decide whether U(t) = exp(i theta) I for some theta."""
    spec = _spectrum_of(D)
    lam0 = spec.values[0]
    return all(((v - lam0) * t.p) % (2 * t.q) == 0 for v in spec.values)


def identity_certificate(D: DivisorSet | Spectrum, t: RationalAngle) -> bool:
    """Exactly decide whether U(t) = I."""
    spec = _spectrum_of(D)
    return all((v * t.p) % (2 * t.q) == 0 for v in spec.values)


def is_periodic(G: CirculantGraph) -> bool:
    """A circulant walk is periodic exactly when the graph is integral."""
    return integrality_decomposition(G) is not None


def pst_search(D: DivisorSet, max_q: int | None = None) -> PstWitness | None:
    """First perfect-state-transfer witness (0, b, pi p/q) in (b, q, p) order.

    Vertex-transitivity lets the source be 0.  Times run over 0 < p < 2q,
    gcd(p, q) = 1, q <= max_q (default 2n); integer eigenvalues make U(t)
    2 pi-periodic, so larger p add nothing.  ``max_q`` is the completeness
    horizon of the search.
    """
    spec = _spectrum_of(D)
    n = spec.n
    if max_q is None:
        max_q = 2 * n
    lam = np.asarray(spec.values, dtype=np.int64)
    for b in range(1, n):
        for q in range(1, max_q + 1):
            for p in range(1, 2 * q):
                if gcd(p, q) != 1:
                    continue
                t = RationalAngle(p, q)
                ph, _ = _phases(lam, n, (-b) % n, t)
                if np.all(ph == ph[0]):
                    return PstWitness(0, b, t, 1.0)
    return None


def antipodal_criterion(D: DivisorSet, t: RationalAngle, relaxed: bool = False) -> bool:
    """exp(i lambda_l t) = (-1)^l for all l, exactly.

    ``relaxed`` allows one common extra phase, exp(i lambda_l t) = c (-1)^l.
    """
    if D.n % 2:
        raise ValueError(f"the antipodal criterion needs even n, got {D.n}")
    spec = _spectrum_of(D)
    # phase of exp(i lambda t) / (-1)^l in units of 2 pi / 2q: lambda p - l q
    residues = {(v * t.p - ell * t.q) % (2 * t.q) for ell, v in enumerate(spec.values)}
    if relaxed:
        return len(residues) == 1
    return residues == {0}


@dataclass(frozen=True)
class OddOrderReport:
    n: int
    graphs_checked: int
    max_q: int
    witnesses: tuple[tuple[DivisorSet, PstWitness], ...]
    mechanism_ok: bool

    @property
    def ok(self) -> bool:
        return not self.witnesses and self.mechanism_ok


def no_pst_odd_check(n: int) -> OddOrderReport:
    """Search every connected integral circulant of odd order n for PST."""
    if n % 2 == 0:
        raise ValueError(f"expected odd n, got {n}")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    witnesses = []
    graphs = enumerate_integral(n)
    for D in graphs:
        w = pst_search(D, max_q=2 * n)
        if w is not None:
            witnesses.append((D, w))
    # for b != 0 some l has w^{lb} != +-1, i.e. 2 l b not divisible by n
    mechanism = all(any((2 * ell * b) % n for ell in range(n)) for b in range(1, n))
    return OddOrderReport(n, len(graphs), 2 * n, tuple(witnesses), mechanism)


def evolution_report(G: CirculantGraph, pst: bool = False, max_q: int | None = None) -> EvolutionReport:
    D = integrality_decomposition(G)
    if D is None:
        return EvolutionReport(G.n, None, G.symbol.members, False, None, None)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        per = period(D)
    witness = pst_search(D, max_q) if pst else None
    return EvolutionReport(G.n, D, G.symbol.members, True, per, witness)


def scalar_distance(G: CirculantGraph, times) -> np.ndarray:
    """min over theta of max |U(t) - exp(i theta) I| entry, for each t.

    All diagonal entries of a circulant U(t) coincide, so the best theta puts
    the diagonal error at 1 - |U_00| and the off-diagonal entries are fixed.
    """
    n = G.n
    ts = np.atleast_1d(np.asarray(times, dtype=float))
    lam = eigenvalues_numeric(G).values.real
    k = np.arange(n)
    chars = np.exp(2j * np.pi * np.outer(k, k) / n)  # chars[l, b] = w^{lb}
    row0 = np.exp(-1j * np.outer(ts, lam)) @ chars.conj() / n  # <0|U(t)|b>
    off = np.abs(row0[:, 1:]).max(axis=1) if n > 1 else np.zeros(len(ts))
    return np.maximum(off, 1.0 - np.abs(row0[:, 0]))
