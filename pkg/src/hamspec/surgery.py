"""Leaf-to-leaf rewiring that straightens a tree without losing sum value.

Pick three distinct leaves of a tree: two ends and a spur. Walking from the
spur toward the first end meets the ends' connecting path at a fork; the
vertex just before the fork is the stub. Detaching the stub from the fork
and reattaching it to either end yields a new tree with strictly fewer
branch vertices, and the end is chosen so that no bijection sum decreases.
Iterating turns any tree into a path; routing a connected graph through a
spanning tree first extends this to arbitrary connected inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    build_graph,
    classify_shape,
    component_after_cut,
    degrees,
    distance_matrix,
    first_spanning_tree,
    is_tree,
    leaves,
    render_graph,
    tree_path,
)
from .spectra import _check_bijection, _check_same_order, pseudo_sum

ARM_A = "arm_a"
ARM_B = "arm_b"
NEITHER = "neither"


@dataclass(frozen=True)
class LeafTriple:
    """Three distinct leaves: the two future path ends and a spur to fold in."""

    end_a: int
    end_b: int
    spur: int


@dataclass(frozen=True)
class Junction:
    """Where the spur's branch meets the path between the ends.

    fork is the meeting vertex, stub its neighbor on the spur side, and
    arm_a / arm_b are the fork's neighbors along the trunk toward end_a and
    end_b respectively.
    """

    fork: int
    stub: int
    arm_a: int
    arm_b: int


def _check_triple(t: Graph, triple: LeafTriple) -> None:
    names = (triple.end_a, triple.end_b, triple.spur)
    if len(set(names)) != 3:
        raise GraphError(f"leaf triple {names!r} is not three distinct vertices")
    leaf_set = leaves(t)
    for v in names:
        if v not in leaf_set:
            raise GraphError(f"vertex {v} is not a leaf of the tree")


def find_junction(t: Graph, triple: LeafTriple) -> Junction:
    """Locate the fork, stub, and trunk arms for a leaf triple of a tree."""
    if not is_tree(t):
        raise GraphError("junctions are defined on trees")
    _check_triple(t, triple)
    trunk = tree_path(t, triple.end_a, triple.end_b)
    on_trunk = set(trunk)
    walk = tree_path(t, triple.spur, triple.end_a)
    meet = next(i for i, v in enumerate(walk) if v in on_trunk)
    # a leaf spur cannot start on the trunk, and a trunk end cannot be the
    # fork, else that end would have degree >= 2
    assert meet >= 1, "spur lies on the trunk"
    fork = walk[meet]
    position = trunk.index(fork)
    assert 0 < position < len(trunk) - 1, "fork landed on a trunk end"
    return Junction(
        fork=fork,
        stub=walk[meet - 1],
        arm_a=trunk[position - 1],
        arm_b=trunk[position + 1],
    )


def spur_component(t: Graph, junction: Junction) -> frozenset[int]:
    """Vertices on the spur side once the stub-fork edge is cut."""
    return component_after_cut(t, (junction.stub, junction.fork), junction.stub)


def rewire(t: Graph, junction: Junction, triple: LeafTriple) -> tuple[Graph, Graph]:
    """Both rewired trees: stub reattached to end_a, and to end_b."""
    kept = [e for e in t.edges if set(e) != {junction.stub, junction.fork}]
    to_a = build_graph(t.n, kept + [(junction.stub, triple.end_a)])
    to_b = build_graph(t.n, kept + [(junction.stub, triple.end_b)])
    return to_a, to_b


def classify_pair(
    t: Graph,
    junction: Junction,
    a: int,
    b: int,
    spur_side: frozenset[int] | None = None,
) -> str:
    """Which fork arm the tree path of a cross pair passes through.

    The pair must straddle the stub-fork cut: a on the spur side, b outside.
    Returns ARM_A, ARM_B, or NEITHER; the path can never use both arms.
    """
    if spur_side is None:
        spur_side = spur_component(t, junction)
    if a not in spur_side or b in spur_side:
        raise GraphError(f"pair ({a}, {b}) does not straddle the stub-fork cut")
    path = tree_path(t, a, b)
    steps = {frozenset(pair) for pair in zip(path, path[1:])}
    uses_a = frozenset((junction.fork, junction.arm_a)) in steps
    uses_b = frozenset((junction.fork, junction.arm_b)) in steps
    assert not (uses_a and uses_b), "tree path used both fork arms"
    if uses_a:
        return ARM_A
    if uses_b:
        return ARM_B
    return NEITHER


def linked_cross_pairs(h: Graph, f, spur_side: frozenset[int]) -> frozenset[tuple[int, int]]:
    """Cross pairs (inside, outside) whose preimages form an edge of H."""
    f = _check_bijection(f, h.n)
    pairs = set()
    for p, q in h.edges:
        x, y = f[p], f[q]
        if x in spur_side and y not in spur_side:
            pairs.add((x, y))
        elif y in spur_side and x not in spur_side:
            pairs.add((y, x))
    return frozenset(pairs)


def branching_weight(g: Graph) -> int:
    """Total degree sitting at branch vertices (degree >= 3); zero on paths."""
    return sum(d for d in degrees(g) if d >= 3)


@dataclass(frozen=True)
class TransformStep:
    """One rewiring: the data that drove the choice plus both sums."""

    before: Graph
    triple: LeafTriple
    junction: Junction
    n_arm_a: int
    n_arm_b: int
    choice: str
    after: Graph
    sum_before: int
    sum_after: int
    weight_before: int
    weight_after: int


@dataclass(frozen=True)
class TransformTrace:
    """A full run from a connected graph down to a path, step by step."""

    initial: Graph
    f: tuple[int, ...]
    spanning_tree: Graph
    initial_sum: int
    tree_sum: int
    steps: tuple[TransformStep, ...]
    final: Graph
    final_sum: int


def choose_transform(t: Graph, h: Graph, f, triple: LeafTriple) -> TransformStep:
    """Rewire toward the end that cannot lower the sum, and record why.

    Cross pairs carrying an H-edge are counted by the fork arm their path
    uses; the stub moves to end_a when the arm_a count is at most the arm_b
    count, otherwise to end_b. The resulting sum never drops.
    """
    _check_same_order(h, t)
    f = _check_bijection(f, t.n)
    junction = find_junction(t, triple)
    spur_side = spur_component(t, junction)
    linked = linked_cross_pairs(h, f, spur_side)
    n_arm_a = 0
    n_arm_b = 0
    for x, y in linked:
        side = classify_pair(t, junction, x, y, spur_side)
        if side == ARM_A:
            n_arm_a += 1
        elif side == ARM_B:
            n_arm_b += 1
    to_a, to_b = rewire(t, junction, triple)
    choice = "end_a" if n_arm_a <= n_arm_b else "end_b"
    after = to_a if choice == "end_a" else to_b
    sum_before = pseudo_sum(h, t, f)
    sum_after = pseudo_sum(h, after, f)
    assert sum_after >= sum_before, "rewiring lowered the sum"
    step = TransformStep(
        before=t,
        triple=triple,
        junction=junction,
        n_arm_a=n_arm_a,
        n_arm_b=n_arm_b,
        choice=choice,
        after=after,
        sum_before=sum_before,
        sum_after=sum_after,
        weight_before=branching_weight(t),
        weight_after=branching_weight(after),
    )
    assert step.weight_after < step.weight_before, "branching weight failed to drop"
    return step


def _is_path_graph(g: Graph) -> bool:
    return g.n == 1 or classify_shape(g) == "path"


def _next_triple(t: Graph) -> LeafTriple:
    low, second, third = sorted(leaves(t))[:3]
    return LeafTriple(end_a=low, end_b=second, spur=third)


def _run_to_path(initial: Graph, tree: Graph, h: Graph, f) -> TransformTrace:
    initial_sum = pseudo_sum(h, initial, f)
    tree_sum = pseudo_sum(h, tree, f)
    assert tree_sum >= initial_sum, "spanning tree shortened a distance"
    steps = []
    current = tree
    budget = branching_weight(tree)
    while not _is_path_graph(current):
        assert len(steps) < max(budget, 1), "rewiring failed to terminate"
        step = choose_transform(current, h, f, _next_triple(current))
        steps.append(step)
        current = step.after
    final_sum = pseudo_sum(h, current, f)
    return TransformTrace(
        initial=initial,
        f=tuple(f),
        spanning_tree=tree,
        initial_sum=initial_sum,
        tree_sum=tree_sum,
        steps=tuple(steps),
        final=current,
        final_sum=final_sum,
    )


def pathify(t: Graph, h: Graph, f) -> TransformTrace:
    """Rewire a tree into a path, never lowering the bijection sum.

    Each step folds the third-smallest leaf toward the two smallest, so the
    run is deterministic; the branching weight strictly decreases, bounding
    the number of steps.
    """
    if not is_tree(t):
        raise GraphError("pathify starts from a tree")
    _check_same_order(h, t)
    f = _check_bijection(f, t.n)
    return _run_to_path(t, t, h, f)


def pathify_general(g: Graph, h: Graph, f) -> TransformTrace:
    """Route any connected graph through its first spanning tree to a path.

    Spanning-tree distances only grow, so the final path sum still bounds
    the starting sum from above.
    """
    _check_same_order(h, g)
    f = _check_bijection(f, g.n)
    return _run_to_path(g, first_spanning_tree(g), h, f)


# ---------------------------------------------------------------------------
# trace serialization

def step_to_dict(step: TransformStep) -> dict:
    return {
        "before": render_graph(step.before),
        "after": render_graph(step.after),
        "triple": {
            "end_a": step.triple.end_a,
            "end_b": step.triple.end_b,
            "spur": step.triple.spur,
        },
        "junction": {
            "fork": step.junction.fork,
            "stub": step.junction.stub,
            "arm_a": step.junction.arm_a,
            "arm_b": step.junction.arm_b,
        },
        "n_arm_a": step.n_arm_a,
        "n_arm_b": step.n_arm_b,
        "choice": step.choice,
        "sum_before": step.sum_before,
        "sum_after": step.sum_after,
        "weight_before": step.weight_before,
        "weight_after": step.weight_after,
    }


def trace_to_dict(trace: TransformTrace, steps: bool = True) -> dict:
    out = {
        "initial": render_graph(trace.initial),
        "spanning_tree": render_graph(trace.spanning_tree),
        "f": list(trace.f),
        "initial_sum": trace.initial_sum,
        "tree_sum": trace.tree_sum,
        "final": render_graph(trace.final),
        "final_sum": trace.final_sum,
        "step_count": len(trace.steps),
    }
    if steps:
        out["steps"] = [step_to_dict(s) for s in trace.steps]
    return out


def format_trace(trace: TransformTrace, steps: bool = True) -> str:
    lines = [
        f"initial: {render_graph(trace.initial)}  sum {trace.initial_sum}",
        f"spanning tree: {render_graph(trace.spanning_tree)}  sum {trace.tree_sum}",
    ]
    if steps:
        for k, step in enumerate(trace.steps, start=1):
            t = step.triple
            j = step.junction
            lines.append(
                f"step {k}: triple ({t.end_a}, {t.end_b}, {t.spur})"
                f"  fork {j.fork} stub {j.stub} arms ({j.arm_a}, {j.arm_b})"
                f"  links {step.n_arm_a}a/{step.n_arm_b}b  choice {step.choice}"
                f"  sum {step.sum_before} -> {step.sum_after}"
                f"  weight {step.weight_before} -> {step.weight_after}"
            )
    lines.append(
        f"final: {render_graph(trace.final)}  sum {trace.final_sum}"
        f"  steps {len(trace.steps)}"
    )
    return "\n".join(lines)
