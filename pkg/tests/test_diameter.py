import math
from collections import deque

import numpy as np
import pytest

from integral_circulant.diameter import (
    INFINITE,
    ResidueSet,
    check_diameter_bounds,
    diameter_bfs,
    diameter_sumset,
    family_diam2,
    family_diam_2r_plus_1,
    generator_number,
    sumset,
    sumset_iterates,
)
from integral_circulant.extremal import enumerate_integral
from integral_circulant.graph import CirculantGraph, DivisorSet, from_divisor_set, negation_closed_symbols


def diameter_by_distance_matrix(G):
    """All-pairs BFS over explicit neighbour lists."""
    best = 0
    for src in range(G.n):
        dist = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in G.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        if len(dist) < G.n:
            return INFINITE
        best = max(best, max(dist.values()))
    return best


def sumset_brute(X, Y, n):
    return {(x + y) % n for x in X for y in Y}


def test_sumset_examples():
    Y = ResidueSet.of(6, [1, 5])
    assert sumset(ResidueSet.of(6, [0]), Y) == Y
    assert set(sumset(Y, Y)) == {0, 2, 4} == sumset_brute({1, 5}, {1, 5}, 6)
    assert len(sumset(ResidueSet(6, 0), Y)) == 0
    with pytest.raises(ValueError):
        sumset(ResidueSet.of(5, [1]), Y)


def test_sumset_matches_pairwise_sums():
    rng = np.random.default_rng(1)
    for _ in range(300):
        n = int(rng.integers(1, 70))
        X = {int(x) for x in rng.integers(0, n, rng.integers(0, 8))}
        Y = {int(y) for y in rng.integers(0, n, rng.integers(0, 8))}
        assert set(sumset(ResidueSet.of(n, X), ResidueSet.of(n, Y))) == sumset_brute(X, Y, n)


def test_residue_set_validation():
    with pytest.raises(ValueError):
        ResidueSet(4, 1 << 4)
    assert ResidueSet.full(5).is_full()
    assert 7 in ResidueSet.of(5, [2])


@pytest.mark.parametrize(
    "G, expected",
    [
        (CirculantGraph.from_symbol(6, [1, 5]), 3),
        (CirculantGraph.from_symbol(4, [1, 2, 3]), 1),
        (from_divisor_set(DivisorSet(18, (1,))), 3),
        (CirculantGraph.from_symbol(6, [2, 4]), INFINITE),
        (CirculantGraph.from_symbol(1, []), 0),
        (from_divisor_set(DivisorSet(105, (3, 5, 7))), 2),
    ],
)
def test_diameter_examples(G, expected):
    assert diameter_sumset(G) == expected
    assert diameter_bfs(G) == expected


def test_bfs_eccentricity_is_diameter():
    for n in range(1, 25):
        for S in negation_closed_symbols(n):
            G = CirculantGraph(n, S)
            assert diameter_bfs(G) == diameter_sumset(G) == diameter_by_distance_matrix(G)


def test_oracles_agree_on_random_symbols():
    rng = np.random.default_rng(7)
    for n in range(25, 61):
        for _ in range(60):
            pairs = [s for s in range(1, n // 2 + 1) if rng.random() < rng.random()]
            G = CirculantGraph.from_symbol(n, {x for s in pairs for x in (s, n - s)})
            assert diameter_sumset(G) == diameter_bfs(G), G


def test_iterates_grow_until_fixed_point():
    for n in range(2, 40):
        for S in list(negation_closed_symbols(n))[:64]:
            sizes = [len(X) for X in sumset_iterates(CirculantGraph(n, S))]
            masks = [X.mask for X in sumset_iterates(CirculantGraph(n, S))]
            for a, b in zip(masks, masks[1:]):
                assert a & b == a  # iT is contained in (i+1)T
            assert all(x < y for x, y in zip(sizes[:-2], sizes[1:-1]))
            assert sizes[-1] == sizes[-2]


@pytest.mark.parametrize("n, D, t", [(105, (3, 5, 7), 2), (6, (1,), 1), (450, (25, 9), 2), (30, (6, 10, 15), 3)])
def test_generator_number(n, D, t):
    assert generator_number(DivisorSet(n, D)) == t


def test_generator_number_rejects_non_generating():
    with pytest.raises(ValueError):
        generator_number(DivisorSet(12, (2, 6)))


@pytest.mark.parametrize("n, D, diam, t", [(105, (3, 5, 7), 2, 2), (450, (25, 9), 5, 2), (6, (1,), 3, 1)])
def test_check_bounds_examples(n, D, diam, t):
    report = check_diameter_bounds(DivisorSet(n, D))
    assert (report.diameter, report.generator_number_t) == (diam, t)
    assert report.lower_ok and report.upper_ok
    assert report.as_dict() == {"n": n, "D": sorted(D), "diameter": diam, "t": t, "lower_ok": True, "upper_ok": True}


def test_bounds_and_trivial_bounds_small():
    for n in range(2, 121):
        for D in enumerate_integral(n):
            report = check_diameter_bounds(D)
            assert report.ok, report
            if D.degree < n - 1:
                assert 2 <= report.diameter <= 2 * len(D) + 1
            else:
                assert report.diameter == 1


@pytest.mark.parametrize("primes, n", [((3, 5, 7), 105), ((3, 5, 11), 165), ((3, 5, 7, 11), 1155)])
def test_family_diam2(primes, n):
    D = family_diam2(primes)
    assert D.n == n and D.members == tuple(sorted(primes))
    G = from_divisor_set(D)
    assert diameter_sumset(G) == diameter_bfs(G) == 2


@pytest.mark.parametrize("primes", [(3, 5), (3,), (3, 3, 5), (3, 5, 2), (3, 5, 9)])
def test_family_diam2_rejects(primes):
    with pytest.raises(ValueError):
        family_diam2(primes)


@pytest.mark.parametrize(
    "primes, n, D, diam",
    [((3,), 18, (1,), 3), ((3, 5), 450, (9, 25), 5), ((3, 5, 7), 22050, (225, 441, 1225), 7)],
)
def test_family_diam_2r_plus_1(primes, n, D, diam):
    fam = family_diam_2r_plus_1(primes)
    assert (fam.n, fam.members) == (n, D)
    G = from_divisor_set(fam)
    assert diameter_sumset(G) == diam
    assert diameter_bfs(G) == diam


@pytest.mark.parametrize("primes", [(3, 3), (2, 3), ()])
def test_family_diam_2r_plus_1_rejects(primes):
    with pytest.raises(ValueError):
        family_diam_2r_plus_1(primes)


def test_odd_part_is_outside_4T_for_3_5_family():
    G = from_divisor_set(family_diam_2r_plus_1((3, 5)))
    iterates = list(sumset_iterates(G))
    assert 15 not in iterates[3]  # 4T
    assert 15 in iterates[4]  # 5T
    assert iterates[4].is_full()


def test_diameter_never_exceeds_half_order():
    for n in range(2, 80):
        for D in enumerate_integral(n):
            assert diameter_sumset(from_divisor_set(D)) <= math.floor(n / 2)
