"""Enumeration of connected graphs and the exhaustive claim sweeps."""

import itertools
import math

import pytest

from hamspec import kernels
from hamspec.graphs import Graph, GraphError, build_graph, is_connected, parse_graph
from hamspec.verify import (
    VerificationReport,
    enumerate_connected_graphs,
    format_report,
    verify_closed_forms,
    verify_non_articulation,
    verify_spanning_tree_characterization,
    verify_upper_bound,
)

# number of connected graphs per isomorphism class, n = 1..7
CLASS_COUNTS = [1, 1, 2, 6, 21, 112, 853]
# number of connected labeled graphs, n = 1..7, from the standard recurrence
# below; frozen here so a regression in either direction gets caught
LABELED_COUNTS = [1, 1, 4, 38, 728, 26704, 1866256]


def _labeled_connected_counts(n_max):
    """All-graphs-minus-rooted-disconnected recurrence, independent of the
    package's enumeration."""
    counts = [0] * (n_max + 1)
    counts[1] = 1
    for n in range(2, n_max + 1):
        total = 2 ** math.comb(n, 2)
        for k in range(1, n):
            total -= (
                counts[k]
                * math.comb(n - 1, k - 1)
                * 2 ** math.comb(n - k, 2)
            )
        counts[n] = total
    return counts[1:]


def _brute_force_classes(n):
    """Connected isomorphism classes by scanning every edge subset and
    deduplicating with pure-python orbit minima (no kernel involved)."""
    pairs = list(itertools.combinations(range(n), 2))
    perms = list(itertools.permutations(range(n)))
    reps = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = build_graph(n, edges)
        if not is_connected(g):
            continue
        orbit_min = min(
            tuple(sorted(tuple(sorted((p[a], p[b]))) for a, b in edges))
            for p in perms
        )
        reps.add(orbit_min)
    return reps


def test_enumeration_counts_match_brute_force():
    for n in range(1, 6):
        assert len(enumerate_connected_graphs(n)) == len(_brute_force_classes(n))


def test_enumeration_counts_known():
    for n, want in enumerate(CLASS_COUNTS, start=1):
        assert len(enumerate_connected_graphs(n)) == want


def test_enumeration_cross_checks_labeled_counts():
    assert _labeled_connected_counts(7) == LABELED_COUNTS
    for n in range(1, 8):
        total = 0
        for g in enumerate_connected_graphs(n):
            _, aut = kernels.canonical_code(kernels.adjacency_matrix(g.n, g.edges))
            total += math.factorial(n) // aut
        assert total == LABELED_COUNTS[n - 1], n


def test_enumeration_representatives_are_canonical():
    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            assert is_connected(g)
            code, _ = kernels.canonical_code(kernels.adjacency_matrix(g.n, g.edges))
            assert kernels.edges_from_code(n, code) == g.edges


def test_enumeration_is_deterministic_and_sorted():
    graphs = enumerate_connected_graphs(6)
    assert graphs == enumerate_connected_graphs(6)
    codes = [
        kernels.canonical_code(kernels.adjacency_matrix(g.n, g.edges))[0]
        for g in graphs
    ]
    assert codes == sorted(codes)
    assert len(set(codes)) == len(codes)


def test_enumeration_guards():
    with pytest.raises(GraphError):
        enumerate_connected_graphs(0)
    with pytest.raises(GraphError):
        enumerate_connected_graphs(8)
    with pytest.raises(GraphError):
        enumerate_connected_graphs(5, max_n=4)


def test_closed_forms_pass():
    report = verify_closed_forms(8)
    assert report.passed
    assert report.claim == "closed-forms"
    assert report.instances_checked == 13
    with pytest.raises(GraphError):
        verify_closed_forms(1)


def test_upper_bound_passes_small():
    for n in range(2, 6):
        report = verify_upper_bound(n)
        assert report.passed, report.failures[:3]
        expected = len(enumerate_connected_graphs(n)) * (1 if n == 2 else 2)
        assert report.instances_checked == expected


def test_upper_bound_all_h():
    report = verify_upper_bound(4, h_family="all")
    assert report.passed
    assert report.instances_checked == 36


def test_upper_bound_jobs_agree():
    solo = verify_upper_bound(5)
    pooled = verify_upper_bound(5, jobs=4)
    assert solo == pooled


def test_upper_bound_resume(tmp_path):
    progress = tmp_path / "sweep.progress"
    first = verify_upper_bound(4, progress_path=str(progress))
    assert first.passed
    recorded = {line for line in progress.read_text().splitlines() if line}
    assert len(recorded) == first.instances_checked
    # every key names a real graph and H family member
    for key in recorded:
        g6, h_name = key.split("|")
        assert parse_graph(g6).n == 4
        assert h_name in ("path", "cycle")
    # a resumed run skips everything yet reports the same coverage
    before = progress.read_text()
    second = verify_upper_bound(4, progress_path=str(progress))
    assert second.passed
    assert second.instances_checked == first.instances_checked
    assert progress.read_text() == before


def test_upper_bound_validation():
    with pytest.raises(GraphError):
        verify_upper_bound(1)
    with pytest.raises(GraphError):
        verify_upper_bound(4, h_family="everything")


def test_spanning_tree_characterization():
    report = verify_spanning_tree_characterization(5)
    assert report.passed
    assert report.claim == "spanning-trees"
    assert report.instances_checked == 30
    with pytest.raises(GraphError):
        verify_spanning_tree_characterization(1)


def test_non_articulation():
    report = verify_non_articulation(5)
    assert report.passed
    assert report.claim == "articulation"
    assert report.instances_checked == 30
    with pytest.raises(GraphError):
        verify_non_articulation(0)


def test_report_formatting():
    passing = VerificationReport("demo", 3, ())
    assert passing.passed
    text = format_report(passing)
    assert "claim: demo" in text
    assert "checked: 3" in text
    assert text.endswith("result: PASS")
    failing = VerificationReport("demo", 3, (("Bw|path", "sum too large"),))
    assert not failing.passed
    text = format_report(failing)
    assert "FAIL Bw|path: sum too large" in text
    assert text.endswith("result: FAIL (1)")
    assert failing.to_dict() == {
        "claim": "demo",
        "instances_checked": 3,
        "failures": [["Bw|path", "sum too large"]],
        "passed": False,
    }


def test_single_vertex_class():
    assert enumerate_connected_graphs(1) == (Graph(1, ()),)
