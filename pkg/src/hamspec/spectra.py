"""Distance sums over vertex bijections and the numbers they induce.

Given two graphs H and G on the same number of vertices, each bijection f
from V(H) to V(G) gets the sum of G-distances d(f(x), f(y)) over the edges
{x, y} of H. The achievable sums form the spectrum; its minimum and maximum
are the lower and upper numbers. Taking H to be a cycle or a path recovers
the classic Hamiltonian and traceable numbers.

G must be connected so distances are finite; H may be disconnected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .graphs import Graph, GraphError, distance_matrix, is_connected, make_cycle, make_path

# n! grows too fast for exhaustive scans much past this; callers may raise it.
EXHAUSTIVE_CAP = 9


def _check_same_order(h: Graph, g: Graph) -> None:
    if h.n != g.n:
        raise GraphError(f"vertex counts differ: H has {h.n}, G has {g.n}")


def _check_bijection(f, n: int) -> tuple[int, ...]:
    f = tuple(f)
    if sorted(f) != list(range(n)):
        raise GraphError(f"{f!r} is not a bijection on range({n})")
    return f


def _check_cap(n: int, max_n: int) -> None:
    if n > max_n:
        raise GraphError(f"exhaustive scan over {n}! permutations exceeds cap n <= {max_n}")


def _edge_arrays(h: Graph) -> tuple[np.ndarray, np.ndarray]:
    hu = np.fromiter((a for a, _ in h.edges), dtype=np.int64, count=len(h.edges))
    hv = np.fromiter((b for _, b in h.edges), dtype=np.int64, count=len(h.edges))
    return hu, hv


def pseudo_sum(h: Graph, g: Graph, f, dg: np.ndarray | None = None) -> int:
    """Sum of G-distances d(f(x), f(y)) over the edges {x, y} of H."""
    _check_same_order(h, g)
    f = _check_bijection(f, g.n)
    if dg is None:
        dg = distance_matrix(g)
    return int(sum(dg[f[a], f[b]] for a, b in h.edges))


def cyclic_sum(g: Graph, order) -> int:
    """Closed-tour sum: consecutive distances along order, plus the wrap-around."""
    order = _check_bijection(order, g.n)
    if g.n < 3:
        raise GraphError(f"cyclic sums need n >= 3, got n={g.n}")
    dg = distance_matrix(g)
    total = sum(int(dg[order[i], order[i + 1]]) for i in range(g.n - 1))
    return total + int(dg[order[-1], order[0]])


def trail_sum(g: Graph, order) -> int:
    """Open-tour sum: consecutive distances along order, no wrap-around."""
    order = _check_bijection(order, g.n)
    if g.n < 2:
        raise GraphError(f"trail sums need n >= 2, got n={g.n}")
    dg = distance_matrix(g)
    return sum(int(dg[order[i], order[i + 1]]) for i in range(g.n - 1))


@dataclass(frozen=True)
class SpectrumReport:
    """Distinct sums with multiplicities, extremes, and witness bijections."""

    values: tuple[tuple[int, int], ...]
    min: int
    max: int
    min_witness: tuple[int, ...]
    max_witness: tuple[int, ...]
    enumerated: int

    def value_set(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.values)

    def to_dict(self) -> dict:
        return {
            "values": [[v, c] for v, c in self.values],
            "min": self.min,
            "max": self.max,
            "min_witness": list(self.min_witness),
            "max_witness": list(self.max_witness),
            "enumerated": self.enumerated,
        }


def spectrum(h: Graph, g: Graph, max_n: int = EXHAUSTIVE_CAP) -> SpectrumReport:
    """Every achievable sum over all bijections, with multiplicities.

    Witnesses are the lexicographically smallest bijections attaining the
    extremes, so reports are reproducible across runs and backends.
    """
    _check_same_order(h, g)
    if not is_connected(g):
        raise GraphError("spectrum needs a connected G")
    _check_cap(g.n, max_n)
    dg = distance_matrix(g)
    hu, hv = _edge_arrays(h)
    counts, best_min, best_max, min_wit, max_wit = kernels.scan_sums(dg, hu, hv)
    values = tuple((s, int(c)) for s, c in enumerate(counts) if c)
    return SpectrumReport(
        values=values,
        min=best_min,
        max=best_max,
        min_witness=tuple(int(x) for x in min_wit),
        max_witness=tuple(int(x) for x in max_wit),
        enumerated=math.factorial(g.n),
    )


def _branch_and_bound(h: Graph, g: Graph, sense: str) -> tuple[int, tuple[int, ...]]:
    """Exact extremal sum by depth-first assignment with admissible bounds.

    H-vertices are placed in descending degree order; a partial assignment
    is bounded by finished edges plus (remaining edges) * diameter for max,
    or plus (remaining edges) * 1 for min, and pruned when it cannot beat
    the incumbent strictly.
    """
    n = g.n
    dg = distance_matrix(g)
    diameter = int(dg.max())
    h_adj = [[] for _ in range(n)]
    for a, b in h.edges:
        h_adj[a].append(b)
        h_adj[b].append(a)
    order = sorted(range(n), key=lambda v: (-len(h_adj[v]), v))
    position = {v: k for k, v in enumerate(order)}
    placed_nbrs = [[u for u in h_adj[v] if position[u] < position[v]] for v in order]
    remaining = [0] * (n + 1)
    for depth in range(n - 1, -1, -1):
        remaining[depth] = remaining[depth + 1] + len(placed_nbrs[depth])
    maximize = sense == "max"

    fmap = [-1] * n
    used = [False] * n
    best_val = -1 if maximize else math.inf
    best_wit: tuple[int, ...] = ()

    def search(depth: int, partial: int) -> None:
        nonlocal best_val, best_wit
        if maximize:
            if partial + remaining[depth] * diameter <= best_val:
                return
        elif partial + remaining[depth] >= best_val:
            return
        if depth == n:
            best_val = partial
            best_wit = tuple(fmap)
            return
        hv = order[depth]
        nbrs = placed_nbrs[depth]
        for gv in range(n):
            if used[gv]:
                continue
            gained = partial
            for u in nbrs:
                gained += int(dg[gv, fmap[u]])
            used[gv] = True
            fmap[hv] = gv
            search(depth + 1, gained)
            used[gv] = False
        fmap[hv] = -1

    search(0, 0)
    return int(best_val), best_wit


def extremal_number(
    h: Graph,
    g: Graph,
    sense: str,
    method: str = "exhaustive",
    max_n: int = EXHAUSTIVE_CAP,
) -> tuple[int, tuple[int, ...]]:
    """Minimum or maximum achievable sum, with a witness bijection.

    method='exhaustive' scans all n! bijections (lexicographically smallest
    witness); method='bnb' prunes with distance bounds and returns the first
    optimal witness it completes.
    """
    _check_same_order(h, g)
    if not is_connected(g):
        raise GraphError("extremal numbers need a connected G")
    if sense not in ("min", "max"):
        raise GraphError(f"sense must be 'min' or 'max', got {sense!r}")
    if method == "bnb":
        return _branch_and_bound(h, g, sense)
    if method != "exhaustive":
        raise GraphError(f"method must be 'exhaustive' or 'bnb', got {method!r}")
    _check_cap(g.n, max_n)
    dg = distance_matrix(g)
    hu, hv = _edge_arrays(h)
    _, best_min, best_max, min_wit, max_wit = kernels.scan_sums(dg, hu, hv)
    if sense == "min":
        return best_min, tuple(int(x) for x in min_wit)
    return best_max, tuple(int(x) for x in max_wit)


class ClassicNumbers(NamedTuple):
    h: int
    h_plus: int
    t: int
    t_plus: int


def traceable_numbers(g: Graph, max_n: int = EXHAUSTIVE_CAP) -> tuple[int, int]:
    """Minimum and maximum open-tour sums; defined from n = 2 up."""
    if g.n < 2:
        raise GraphError(f"traceable numbers need n >= 2, got n={g.n}")
    path = make_path(g.n)
    lo, _ = extremal_number(path, g, "min", max_n=max_n)
    hi, _ = extremal_number(path, g, "max", max_n=max_n)
    return lo, hi


def hamiltonian_numbers(g: Graph, max_n: int = EXHAUSTIVE_CAP) -> tuple[int, int]:
    """Minimum and maximum closed-tour sums; defined from n = 3 up."""
    if g.n < 3:
        raise GraphError(f"hamiltonian numbers need n >= 3, got n={g.n}")
    cycle = make_cycle(g.n)
    lo, _ = extremal_number(cycle, g, "min", max_n=max_n)
    hi, _ = extremal_number(cycle, g, "max", max_n=max_n)
    return lo, hi


def classic_numbers(g: Graph, max_n: int = EXHAUSTIVE_CAP) -> ClassicNumbers:
    """All four classic tour numbers (closed min/max, open min/max)."""
    h_lo, h_hi = hamiltonian_numbers(g, max_n=max_n)
    t_lo, t_hi = traceable_numbers(g, max_n=max_n)
    return ClassicNumbers(h_lo, h_hi, t_lo, t_hi)


def contains_subgraph(h: Graph, g: Graph, max_n: int = EXHAUSTIVE_CAP) -> bool:
    """True iff H is isomorphic to a subgraph of G (same vertex count).

    Equivalent to the minimum sum hitting its floor |E(H)|: a bijection
    achieves distance exactly 1 on every H-edge iff it embeds H into G.
    """
    _check_same_order(h, g)
    value, _ = extremal_number(h, g, "min", max_n=max_n)
    return value == len(h.edges)


def isomorphic_via_h(h: Graph, g: Graph, max_n: int = EXHAUSTIVE_CAP) -> bool:
    """True iff G and H are isomorphic, decided through the minimum sum.

    Requires equal vertex and edge counts; then a subgraph embedding of H
    into G is forced to be onto the edges of G as well.
    """
    _check_same_order(h, g)
    if len(h.edges) != len(g.edges):
        raise GraphError(
            f"edge counts differ: H has {len(h.edges)}, G has {len(g.edges)}"
        )
    return contains_subgraph(h, g, max_n=max_n)
