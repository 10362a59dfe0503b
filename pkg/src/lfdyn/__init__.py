"""Fully dynamic maximal independent set and matching via random greedy ranks.

Maintains, under single edge insertions and deletions, exactly the solution
a greedy pass in random rank order would compute from scratch, in expected
time polylogarithmic in the update count. The compiled kernel is used when
built; set LFDYN_KERNEL=pure to force the fallback.
"""

from ._kernel import available as available_kernels
from .clustering import cluster_changes, cluster_of, clusters
from .graph import DuplicateInsert, Graph, GraphError, MissingDelete, edge_key
from .matching import DynamicMatching
from .mis import DynamicMis
from .oracle import (
    MisSolution,
    MmSolution,
    compute_lfmis,
    compute_lfmm,
    residual_edges,
    residual_vertices,
)
from .ranking import Rank, VertexRanking, compare, draw_edge_rank, new_vertex_ranking
from .report import UpdateReport
from .runner import (
    VerificationError,
    bench_compare,
    flip_shape_ok,
    pruning_test,
    run,
    verify_mis,
    verify_mm,
)
from .streams import Stream, StreamError, Update, generate_stream, parse_stream

__version__ = "0.1.0"

__all__ = [
    "DynamicMis",
    "DynamicMatching",
    "Graph",
    "GraphError",
    "DuplicateInsert",
    "MissingDelete",
    "edge_key",
    "Rank",
    "VertexRanking",
    "new_vertex_ranking",
    "draw_edge_rank",
    "compare",
    "UpdateReport",
    "MisSolution",
    "MmSolution",
    "compute_lfmis",
    "compute_lfmm",
    "residual_vertices",
    "residual_edges",
    "cluster_of",
    "clusters",
    "cluster_changes",
    "Stream",
    "StreamError",
    "Update",
    "generate_stream",
    "parse_stream",
    "run",
    "bench_compare",
    "pruning_test",
    "verify_mis",
    "verify_mm",
    "flip_shape_ok",
    "VerificationError",
    "available_kernels",
    "__version__",
]
