"""Backend agreement and correctness of the permutation-scan kernels."""

import itertools
import math
import random

import numpy as np
import pytest

from hamspec import kernels
from hamspec.graphs import build_graph, distance_matrix, make_complete, make_cycle, make_path

pytestmark = pytest.mark.skipif(
    not kernels.HAVE_NUMBA, reason="agreement tests compare against the numba backend"
)


def _random_instance(rng, n):
    tree = [(rng.randrange(i), i) for i in range(1, n)]
    extra = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.3 and (i, j) not in tree
    ]
    g = build_graph(n, tree + extra)
    h_edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
    ]
    hu = np.fromiter((a for a, _ in h_edges), dtype=np.int64, count=len(h_edges))
    hv = np.fromiter((b for _, b in h_edges), dtype=np.int64, count=len(h_edges))
    return distance_matrix(g), hu, hv


def test_active_backend_env(monkeypatch):
    monkeypatch.setenv("HAMSPEC_KERNEL", "numpy")
    assert kernels.active_backend() == "numpy"
    monkeypatch.setenv("HAMSPEC_KERNEL", "numba")
    assert kernels.active_backend() == "numba"
    monkeypatch.setenv("HAMSPEC_KERNEL", "anything-else")
    assert kernels.active_backend() == "numba"
    monkeypatch.delenv("HAMSPEC_KERNEL")
    assert kernels.active_backend() == "numba"


def test_resolve_rejects_unknown():
    dist = distance_matrix(make_path(3))
    empty = np.zeros(0, dtype=np.int64)
    with pytest.raises(ValueError):
        kernels.scan_sums(dist, empty, empty, backend="cuda")


def test_scan_sums_backends_agree():
    rng = random.Random(2471)
    for _ in range(25):
        n = rng.randint(1, 7)
        dist, hu, hv = _random_instance(rng, n)
        counts_a, min_a, max_a, mw_a, xw_a = kernels.scan_sums(dist, hu, hv, backend="numba")
        counts_b, min_b, max_b, mw_b, xw_b = kernels.scan_sums(dist, hu, hv, backend="numpy")
        assert np.array_equal(counts_a, counts_b)
        assert (min_a, max_a) == (min_b, max_b)
        assert np.array_equal(mw_a, mw_b)
        assert np.array_equal(xw_a, xw_b)
        assert counts_a.sum() == math.factorial(n)


def test_scan_sums_witnesses_are_lex_smallest():
    # brute force the same scan in pure python
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)])
    h = build_graph(5, [(0, 2), (1, 3), (2, 4), (0, 1)])
    dist = distance_matrix(g)
    hu = np.array([a for a, _ in h.edges], dtype=np.int64)
    hv = np.array([b for _, b in h.edges], dtype=np.int64)
    sums = {}
    for perm in itertools.permutations(range(5)):
        s = sum(int(dist[perm[a], perm[b]]) for a, b in h.edges)
        sums.setdefault(s, perm)
    for backend in ("numba", "numpy"):
        counts, lo, hi, mw, xw = kernels.scan_sums(dist, hu, hv, backend=backend)
        assert lo == min(sums)
        assert hi == max(sums)
        assert tuple(mw) == sums[lo]
        assert tuple(xw) == sums[hi]
        for s, c in ((s, c) for s, c in enumerate(counts) if c):
            assert s in sums


def test_scan_sums_edgeless_h():
    dist = distance_matrix(make_cycle(4))
    empty = np.zeros(0, dtype=np.int64)
    for backend in ("numba", "numpy"):
        counts, lo, hi, mw, xw = kernels.scan_sums(dist, empty, empty, backend=backend)
        assert counts.tolist() == [24]
        assert (lo, hi) == (0, 0)
        assert tuple(mw) == tuple(xw) == (0, 1, 2, 3)


def test_scan_sums_single_vertex():
    dist = np.zeros((1, 1), dtype=np.int64)
    empty = np.zeros(0, dtype=np.int64)
    for backend in ("numba", "numpy"):
        counts, lo, hi, mw, xw = kernels.scan_sums(dist, empty, empty, backend=backend)
        assert counts.tolist() == [1]
        assert (lo, hi) == (0, 0)


def test_canonical_backends_agree():
    rng = random.Random(907)
    for _ in range(25):
        n = rng.randint(1, 7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        adj = kernels.adjacency_matrix(n, edges)
        assert kernels.canonical_code(adj, backend="numba") == kernels.canonical_code(
            adj, backend="numpy"
        )


def test_canonical_code_is_isomorphism_invariant():
    rng = random.Random(31337)
    for _ in range(20):
        n = rng.randint(2, 7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = [(perm[a], perm[b]) for a, b in edges]
        code_a, aut_a = kernels.canonical_code(kernels.adjacency_matrix(n, edges))
        code_b, aut_b = kernels.canonical_code(kernels.adjacency_matrix(n, relabeled))
        assert code_a == code_b
        assert aut_a == aut_b


def test_automorphism_counts():
    cases = [
        (make_path(4), 2),
        (make_cycle(4), 8),
        (make_complete(4), 24),
        (build_graph(4, [(0, 1), (0, 2), (0, 3)]), 6),
        (build_graph(1, []), 1),
    ]
    for g, expected in cases:
        _, aut = kernels.canonical_code(kernels.adjacency_matrix(g.n, g.edges))
        assert aut == expected, g


def test_edges_from_code_round_trip():
    rng = random.Random(55)
    for _ in range(20):
        n = rng.randint(1, 7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        adj = kernels.adjacency_matrix(n, edges)
        code, _ = kernels.canonical_code(adj)
        rebuilt = kernels.edges_from_code(n, code)
        rebuilt_code, _ = kernels.canonical_code(kernels.adjacency_matrix(n, rebuilt))
        assert rebuilt_code == code
        assert len(rebuilt) == len(edges)


def test_canonical_code_size_guard():
    with pytest.raises(ValueError):
        kernels.canonical_code(np.zeros((13, 13), dtype=np.int64))
