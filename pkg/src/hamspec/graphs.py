"""Finite simple graphs: construction, file formats, and structural queries.

Graphs are immutable records over vertex set {0, ..., n-1}. Everything else
in the package (spectra, surgery, verification) builds on the helpers here:
BFS distances, shape classification, unique tree paths, component splits,
and spanning-tree enumeration.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class GraphError(ValueError):
    """A graph value violates a precondition (bad edge, wrong size, ...)."""


class FormatError(GraphError):
    """Serialized graph data cannot be decoded."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus sorted edge tuple.

    Edges are (a, b) with a < b, deduplicated and sorted, so equal graphs
    compare and hash equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def edge_count(self) -> int:
        return len(self.edges)


def build_graph(n: int, edges) -> Graph:
    """Validate and normalize (n, edges) into a Graph.

    Rejects n < 1, self-loops, and endpoints outside range(n). Duplicate
    edges and reversed orderings are normalized away.
    """
    if n < 1:
        raise GraphError(f"need at least one vertex, got n={n}")
    normalized = set()
    for edge in edges:
        a, b = edge
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge {edge!r} out of range for n={n}")
        normalized.add((min(a, b), max(a, b)))
    return Graph(n, tuple(sorted(normalized)))


def make_path(n: int) -> Graph:
    """Path 0-1-...-(n-1); a single vertex for n=1."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0; undefined below n=3."""
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(n, tuple(sorted(edges)))


def make_complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


@lru_cache(maxsize=None)
def adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Neighbor tuple per vertex, each sorted ascending."""
    nbrs = [[] for _ in range(g.n)]
    for a, b in g.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    return tuple(tuple(sorted(ns)) for ns in nbrs)


def degrees(g: Graph) -> tuple[int, ...]:
    return tuple(len(ns) for ns in adjacency(g))


def leaves(g: Graph) -> frozenset[int]:
    """Vertices of degree exactly 1."""
    return frozenset(v for v, d in enumerate(degrees(g)) if d == 1)


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    adj = adjacency(g)
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                reached += 1
                queue.append(w)
    return reached == g.n


def is_tree(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and is_connected(g)


@lru_cache(maxsize=None)
def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest-path lengths by BFS from every vertex.

    Returns a read-only (n, n) int64 array; requires a connected graph so
    every entry is finite.
    """
    if not is_connected(g):
        raise GraphError("distance matrix requires a connected graph")
    adj = adjacency(g)
    dist = np.full((g.n, g.n), -1, dtype=np.int64)
    for src in range(g.n):
        row = dist[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            v = queue.popleft()
            dv = row[v]
            for w in adj[v]:
                if row[w] < 0:
                    row[w] = dv + 1
                    queue.append(w)
    dist.setflags(write=False)
    return dist


def classify_shape(g: Graph) -> str:
    """Classify a connected graph on >= 2 vertices as path, cycle, or other."""
    if g.n < 2:
        raise GraphError("shape classification needs n >= 2")
    if not is_connected(g):
        raise GraphError("shape classification needs a connected graph")
    degs = degrees(g)
    if all(d == 2 for d in degs):
        return "cycle"
    ones = sum(1 for d in degs if d == 1)
    twos = sum(1 for d in degs if d == 2)
    if ones == 2 and ones + twos == g.n:
        return "path"
    return "other"


def tree_path(t: Graph, a: int, b: int) -> tuple[int, ...]:
    """The unique path between two vertices of a tree, endpoints included."""
    if not is_tree(t):
        raise GraphError("tree_path requires a tree")
    if not (0 <= a < t.n and 0 <= b < t.n):
        raise GraphError(f"vertices ({a}, {b}) out of range for n={t.n}")
    adj = adjacency(t)
    parent = [-1] * t.n
    parent[a] = a
    queue = deque([a])
    while queue:
        v = queue.popleft()
        if v == b:
            break
        for w in adj[v]:
            if parent[w] < 0:
                parent[w] = v
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return tuple(path)


def component_after_cut(g: Graph, cut: tuple[int, int], seed: int) -> frozenset[int]:
    """Vertices reachable from seed once the edge cut is removed."""
    a, b = min(cut), max(cut)
    if (a, b) not in set(g.edges):
        raise GraphError(f"cut edge {cut!r} is not in the graph")
    if not (0 <= seed < g.n):
        raise GraphError(f"seed {seed} out of range for n={g.n}")
    adj = adjacency(g)
    seen = {seed}
    queue = deque([seed])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if {v, w} == {a, b}:
                continue
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


def non_articulation_vertex(g: Graph) -> int:
    """Smallest vertex whose removal keeps the graph connected.

    Every connected graph on >= 2 vertices has one (any leaf of a spanning
    tree works), so the scan cannot come up empty.
    """
    if g.n < 2:
        raise GraphError("need n >= 2 to remove a vertex")
    if not is_connected(g):
        raise GraphError("articulation queries need a connected graph")
    adj = adjacency(g)
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        seen = {rest[0]}
        queue = deque([rest[0]])
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if w != v and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) == g.n - 1:
            return v
    raise GraphError("no removable vertex found in a connected graph")


def _spanning_tree_iter(g: Graph):
    """Yield spanning trees as edge subsets in lexicographic order."""
    if not is_connected(g):
        raise GraphError("spanning trees require a connected graph")
    if g.n == 1:
        yield Graph(1, ())
        return
    for subset in itertools.combinations(g.edges, g.n - 1):
        candidate = Graph(g.n, subset)
        if is_connected(candidate):
            yield candidate


def spanning_trees(g: Graph) -> list[Graph]:
    """All spanning trees, ordered by their sorted edge tuples."""
    return list(_spanning_tree_iter(g))


def first_spanning_tree(g: Graph) -> Graph:
    return next(_spanning_tree_iter(g))


# ---------------------------------------------------------------------------
# serialization

_G6_HEADER = ">>graph6<<"


def _graph6_encode(g: Graph) -> str:
    if g.n > 62:
        raise FormatError(f"graph6 short form handles n <= 62, got {g.n}")
    adj = np.zeros((g.n, g.n), dtype=bool)
    for a, b in g.edges:
        adj[a, b] = adj[b, a] = True
    # upper triangle, column by column
    bits = [int(adj[i, j]) for j in range(1, g.n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k:k + 6]:
            value = (value << 1) | bit
        chars.append(chr(value + 63))
    return "".join(chars)


def _graph6_decode(text: str) -> Graph:
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise FormatError("empty graph6 string")
    n = ord(text[0]) - 63
    if not (1 <= n <= 62):
        raise FormatError(f"unsupported graph6 vertex count byte {text[0]!r}")
    need = n * (n - 1) // 2
    body = text[1:]
    if len(body) != (need + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        if not (0 <= value < 64):
            raise FormatError(f"graph6 byte {ch!r} out of range")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[need:]):
        raise FormatError("nonzero padding bits in graph6 data")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(sorted(edges)))


def _edge_list_encode(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def _edge_list_decode(text: str) -> Graph:
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise FormatError("duplicate vertex-count line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise FormatError(f"bad vertex-count line {raw!r}")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise FormatError(f"bad edge line {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"bad edge line {raw!r}") from None
        edges.append((a, b))
    if n is None:
        if not edges:
            raise FormatError("edge list has no 'n <count>' line and no edges")
        n = max(max(a, b) for a, b in edges) + 1
    return build_graph(n, edges)


def render_graph(g: Graph, fmt: str = "graph6") -> str:
    """Serialize a graph as 'graph6' or 'edge-list' text."""
    if fmt == "graph6":
        return _graph6_encode(g)
    if fmt == "edge-list":
        return _edge_list_encode(g)
    raise FormatError(f"unknown graph format {fmt!r}")


def parse_graph(data, fmt: str = "graph6") -> Graph:
    """Decode 'graph6' or 'edge-list' text (str or bytes) into a Graph."""
    text = data.decode("ascii") if isinstance(data, bytes) else data
    if fmt == "graph6":
        return _graph6_decode(text.strip())
    if fmt == "edge-list":
        return _edge_list_decode(text)
    raise FormatError(f"unknown graph format {fmt!r}")
