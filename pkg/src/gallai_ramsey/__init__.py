"""Gallai colorings of complete graphs.

Build the layered extremal colorings, compute Gallai partitions,
evaluate the known closed-form (Gallai-)Ramsey values for paths, even
cycles, matchings and the triangle, and verify small cases by certified
exhaustive search.
"""

from .coloring import (
    ColorOutOfRangeError,
    EdgeColoring,
    MissingEdgeError,
    ParseError,
    RainbowWitness,
    is_gallai,
    new_coloring,
    pair_index,
    random_gallai,
    read_coloring,
    write_coloring,
)
from .construction import build_lower_bound_coloring, layer_sizes, layers
from .formulas import (
    HEAD_CYCLE,
    HEAD_PATH,
    IndexOutOfRangeError,
    InvalidSpecError,
    OutOfHypothesesError,
    TargetSpec,
    UnsupportedPairError,
    classical_ramsey,
    known_gr,
    parse_spec_string,
    predicted_gr,
    sorted_spec,
)
from .partition import (
    GallaiPartition,
    NotAPartitionError,
    ViolationReport,
    gallai_partition,
    reduced_graph,
    validate_partition,
)
from .search import (
    SpecLengthMismatchError,
    contains_required,
    find_mono,
    verify_embedding,
)
from .targets import (
    Embedding,
    TargetGraph,
    even_cycle,
    matching,
    parse_target,
    parse_target_list,
    path,
)
from .verifier import (
    ALL_FORCED,
    BAD_COLORING,
    BUDGET,
    DEFAULT_BUDGET,
    GrResult,
    LowerBoundResult,
    SearchStats,
    Verdict,
    compute_gr,
    decide_upper,
    report_to_json,
    verify_lower,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_FORCED",
    "BAD_COLORING",
    "BUDGET",
    "ColorOutOfRangeError",
    "DEFAULT_BUDGET",
    "EdgeColoring",
    "Embedding",
    "GallaiPartition",
    "GrResult",
    "HEAD_CYCLE",
    "HEAD_PATH",
    "IndexOutOfRangeError",
    "InvalidSpecError",
    "LowerBoundResult",
    "MissingEdgeError",
    "NotAPartitionError",
    "OutOfHypothesesError",
    "ParseError",
    "RainbowWitness",
    "SearchStats",
    "SpecLengthMismatchError",
    "TargetGraph",
    "TargetSpec",
    "UnsupportedPairError",
    "Verdict",
    "ViolationReport",
    "build_lower_bound_coloring",
    "classical_ramsey",
    "compute_gr",
    "contains_required",
    "decide_upper",
    "even_cycle",
    "find_mono",
    "gallai_partition",
    "is_gallai",
    "known_gr",
    "layer_sizes",
    "layers",
    "matching",
    "new_coloring",
    "pair_index",
    "parse_spec_string",
    "parse_target",
    "parse_target_list",
    "path",
    "predicted_gr",
    "random_gallai",
    "read_coloring",
    "reduced_graph",
    "report_to_json",
    "sorted_spec",
    "validate_partition",
    "verify_embedding",
    "verify_lower",
    "write_coloring",
]
