"""Exhaustive checks of the package's structural claims on small graphs.

Connected graphs are enumerated one representative per isomorphism class by
growing each smaller class with a new vertex attached to every nonempty
subset of the old vertices; a graph stays connected exactly when it has a
vertex whose removal leaves it connected, so every class is reached. Each
checker sweeps a claim over such an enumeration and returns a report whose
failures pin down the offending graphs in graph6 form.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .graphs import (
    Graph,
    GraphError,
    build_graph,
    classify_shape,
    is_connected,
    make_cycle,
    make_path,
    non_articulation_vertex,
    render_graph,
    spanning_trees,
)
from .spectra import extremal_number

# n=8 already holds 11117 classes and 8! permutations apiece; past 7 the
# sweeps stop being interactive.
ENUMERATION_CAP = 7


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    seen = set()
    for base in _connected_classes(n - 1):
        for mask in range(1, 1 << (n - 1)):
            edges = list(base.edges)
            edges.extend((v, n - 1) for v in range(n - 1) if (mask >> v) & 1)
            code, _ = kernels.canonical_code(kernels.adjacency_matrix(n, edges))
            seen.add(code)
    return tuple(Graph(n, kernels.edges_from_code(n, code)) for code in sorted(seen))


def enumerate_connected_graphs(n: int, max_n: int = ENUMERATION_CAP) -> tuple[Graph, ...]:
    """One canonical representative per connected isomorphism class on n vertices.

    Representatives are rebuilt from their canonical codes, so canonicalizing
    any member of the output returns that member; the tuple is ordered by
    canonical code.
    """
    if n < 1:
        raise GraphError(f"enumeration needs n >= 1, got {n}")
    if n > max_n:
        raise GraphError(f"enumeration cap is n <= {max_n}, got {n}")
    return _connected_classes(n)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of sweeping one claim over an exhaustive family."""

    claim: str
    instances_checked: int
    failures: tuple[tuple[str, str], ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "instances_checked": self.instances_checked,
            "failures": [[key, detail] for key, detail in self.failures],
            "passed": self.passed,
        }


def format_report(report: VerificationReport) -> str:
    lines = [
        f"claim: {report.claim}",
        f"checked: {report.instances_checked}",
    ]
    for key, detail in report.failures:
        lines.append(f"FAIL {key}: {detail}")
    lines.append("result: PASS" if report.passed else f"result: FAIL ({len(report.failures)})")
    return "\n".join(lines)


def verify_closed_forms(n_max: int) -> VerificationReport:
    """Extreme tour sums of the path graph match their closed forms.

    For the n-vertex path, the maximum open-tour sum is floor(n^2/2) - 1
    (n >= 2) and the maximum closed-tour sum is floor(n^2/2) (n >= 3).
    """
    if n_max < 2:
        raise GraphError(f"closed forms start at n=2, got n_max={n_max}")
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        path = make_path(n)
        expected_open = n * n // 2 - 1
        got, _ = extremal_number(make_path(n), path, "max", max_n=n)
        checked += 1
        if got != expected_open:
            failures.append(
                (f"{render_graph(path)}|open|n={n}", f"got {got}, expected {expected_open}")
            )
        if n >= 3:
            expected_closed = n * n // 2
            got, _ = extremal_number(make_cycle(n), path, "max", max_n=n)
            checked += 1
            if got != expected_closed:
                failures.append(
                    (f"{render_graph(path)}|closed|n={n}", f"got {got}, expected {expected_closed}")
                )
    return VerificationReport("closed-forms", checked, tuple(sorted(failures)))


def _upper_bound_items(n: int, h_family: str):
    if h_family == "canonical":
        hs = [("path", make_path(n))]
        if n >= 3:
            hs.append(("cycle", make_cycle(n)))
    elif h_family == "all":
        hs = [(render_graph(h), h) for h in enumerate_connected_graphs(n)]
    else:
        raise GraphError(f"h_family must be 'canonical' or 'all', got {h_family!r}")
    graphs = enumerate_connected_graphs(n)
    return hs, graphs


def _check_upper_bound_item(h: Graph, g: Graph, bound: int, n: int):
    value, _ = extremal_number(h, g, "max", max_n=n)
    shape = classify_shape(g)
    if value > bound:
        return f"max sum {value} exceeds path bound {bound}"
    if value == bound and shape != "path":
        return f"non-path graph ({shape}) attained the path bound {bound}"
    if value < bound and shape == "path":
        return f"path graph fell short of the bound: {value} < {bound}"
    return None


def verify_upper_bound(
    n: int,
    h_family: str = "canonical",
    jobs: int = 1,
    progress_path: str | None = None,
) -> VerificationReport:
    """The n-vertex path maximizes the maximum sum, uniquely, for every H.

    For each H in the family and every connected G on n vertices, the
    maximum sum over bijections is at most the value attained when G is the
    path, with equality exactly when G is the path. A progress file (one key
    per line) lets an interrupted sweep resume: recorded keys are skipped
    but still counted. Only passing items are recorded, so failures are
    re-examined on resume.
    """
    if n < 2:
        raise GraphError(f"upper-bound sweeps start at n=2, got {n}")
    hs, graphs = _upper_bound_items(n, h_family)
    done = set()
    if progress_path and os.path.exists(progress_path):
        with open(progress_path, "r", encoding="ascii") as fh:
            done = {line.strip() for line in fh if line.strip()}
    items = []
    skipped = 0
    for h_name, h in hs:
        bound, _ = extremal_number(h, make_path(n), "max", max_n=n)
        for g in graphs:
            key = f"{render_graph(g)}|{h_name}"
            if key in done:
                skipped += 1
                continue
            items.append((key, h, g, bound))

    failures = []
    log = open(progress_path, "a", encoding="ascii") if progress_path else None
    try:
        def run(item):
            key, h, g, bound = item
            return key, _check_upper_bound_item(h, g, bound, n)

        if jobs > 1:
            # numba kernels drop the GIL, so threads scan in parallel
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(run, items))
        else:
            results = [run(item) for item in items]
        for key, problem in results:
            if problem is None:
                if log:
                    log.write(key + "\n")
                    log.flush()
            else:
                failures.append((key, problem))
    finally:
        if log:
            log.close()
    return VerificationReport(
        "upper-bound", len(items) + skipped, tuple(sorted(failures))
    )


def verify_spanning_tree_characterization(n_max: int) -> VerificationReport:
    """All spanning trees are paths exactly for paths and cycles.

    Sweeps every connected graph on 2..n_max vertices and compares the
    all-spanning-trees-are-paths predicate against the graph's shape.
    """
    if n_max < 2:
        raise GraphError(f"spanning-tree sweeps start at n=2, got n_max={n_max}")
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        for g in enumerate_connected_graphs(n):
            checked += 1
            all_paths = all(classify_shape(t) == "path" for t in spanning_trees(g))
            expected = classify_shape(g) in ("path", "cycle")
            if all_paths != expected:
                failures.append(
                    (
                        render_graph(g),
                        f"all-spanning-trees-are-paths={all_paths} but shape={classify_shape(g)}",
                    )
                )
    return VerificationReport("spanning-trees", checked, tuple(sorted(failures)))


def verify_non_articulation(n_max: int) -> VerificationReport:
    """Every connected graph on >= 2 vertices has a removable vertex.

    The located vertex is re-checked independently by rebuilding the graph
    without it and testing connectivity on the relabeled remainder.
    """
    if n_max < 2:
        raise GraphError(f"articulation sweeps start at n=2, got n_max={n_max}")
    failures = []
    checked = 0
    for n in range(2, n_max + 1):
        for g in enumerate_connected_graphs(n):
            checked += 1
            try:
                v = non_articulation_vertex(g)
            except GraphError as exc:
                failures.append((render_graph(g), f"no removable vertex found: {exc}"))
                continue
            relabel = {u: i for i, u in enumerate(x for x in range(n) if x != v)}
            rest = build_graph(
                n - 1,
                [
                    (relabel[a], relabel[b])
                    for a, b in g.edges
                    if a != v and b != v
                ],
            )
            if not is_connected(rest):
                failures.append(
                    (render_graph(g), f"removing vertex {v} disconnected the graph")
                )
    return VerificationReport("articulation", checked, tuple(sorted(failures)))
