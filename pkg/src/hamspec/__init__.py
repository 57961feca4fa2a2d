"""Distance-sum spectra of small graphs, tree rewiring, and exhaustive checks."""

from .graphs import (
    FormatError,
    Graph,
    GraphError,
    build_graph,
    classify_shape,
    component_after_cut,
    degrees,
    distance_matrix,
    first_spanning_tree,
    is_connected,
    is_tree,
    leaves,
    make_complete,
    make_cycle,
    make_path,
    non_articulation_vertex,
    parse_graph,
    render_graph,
    spanning_trees,
    tree_path,
)
from .spectra import (
    EXHAUSTIVE_CAP,
    ClassicNumbers,
    SpectrumReport,
    classic_numbers,
    contains_subgraph,
    cyclic_sum,
    extremal_number,
    hamiltonian_numbers,
    isomorphic_via_h,
    pseudo_sum,
    spectrum,
    traceable_numbers,
    trail_sum,
)
from .surgery import (
    ARM_A,
    ARM_B,
    NEITHER,
    Junction,
    LeafTriple,
    TransformStep,
    TransformTrace,
    branching_weight,
    choose_transform,
    classify_pair,
    find_junction,
    format_trace,
    linked_cross_pairs,
    pathify,
    pathify_general,
    rewire,
    spur_component,
    step_to_dict,
    trace_to_dict,
)
from .verify import (
    ENUMERATION_CAP,
    VerificationReport,
    enumerate_connected_graphs,
    format_report,
    verify_closed_forms,
    verify_non_articulation,
    verify_spanning_tree_characterization,
    verify_upper_bound,
)

__all__ = [
    "ARM_A",
    "ARM_B",
    "ClassicNumbers",
    "ENUMERATION_CAP",
    "EXHAUSTIVE_CAP",
    "FormatError",
    "Graph",
    "GraphError",
    "Junction",
    "LeafTriple",
    "NEITHER",
    "SpectrumReport",
    "TransformStep",
    "TransformTrace",
    "VerificationReport",
    "branching_weight",
    "build_graph",
    "choose_transform",
    "classic_numbers",
    "classify_pair",
    "classify_shape",
    "component_after_cut",
    "contains_subgraph",
    "cyclic_sum",
    "degrees",
    "distance_matrix",
    "enumerate_connected_graphs",
    "extremal_number",
    "find_junction",
    "first_spanning_tree",
    "format_report",
    "format_trace",
    "hamiltonian_numbers",
    "is_connected",
    "is_tree",
    "isomorphic_via_h",
    "leaves",
    "linked_cross_pairs",
    "make_complete",
    "make_cycle",
    "make_path",
    "non_articulation_vertex",
    "parse_graph",
    "pathify",
    "pathify_general",
    "pseudo_sum",
    "render_graph",
    "rewire",
    "spanning_trees",
    "spectrum",
    "spur_component",
    "step_to_dict",
    "trace_to_dict",
    "traceable_numbers",
    "trail_sum",
    "tree_path",
    "verify_closed_forms",
    "verify_non_articulation",
    "verify_spanning_tree_characterization",
    "verify_upper_bound",
]
