"""Regenerate pst_even.json: first PST witness per connected integral circulant.

Independent of the package: adjacency from gcd classes, U(t) from scipy expm,
unit modulus judged numerically at 1e-9.
"""
import json
import math
from itertools import combinations
from pathlib import Path

import numpy as np
from scipy.linalg import expm

NMAX = 16


def witness(n, D):
    S = [s for s in range(1, n) if math.gcd(s, n) in D]
    A = np.zeros((n, n))
    for i in range(n):
        for s in S:
            A[i, (i + s) % n] = 1
    best = None
    for q in range(1, 2 * n + 1):
        for p in range(1, 2 * q):
            if math.gcd(p, q) != 1:
                continue
            row = np.abs(expm(-1j * A * math.pi * p / q)[0])
            for b in range(1, n):
                if row[b] > 1 - 1e-9 and (best is None or (b, q, p) < best):
                    best = (b, q, p)
    return best


def main():
    rows = []
    for n in range(2, NMAX + 1, 2):
        cands = [d for d in range(1, n) if n % d == 0]
        for r in range(1, len(cands) + 1):
            for D in combinations(cands, r):
                if math.gcd(n, *D) != 1:
                    continue
                w = witness(n, D)
                rows.append({"n": n, "D": list(D), "pst": None if w is None else {"b": w[0], "p": w[2], "q": w[1]}})
    out = {"max_q": "2n", "oracle": "scipy expm, |U[0,b]| > 1 - 1e-9", "rows": rows}
    Path(__file__).with_name("pst_even.json").write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
