"""Static reference solutions, recomputed from scratch.

These implement the greedy definitions directly: admit vertices (or edges)
in increasing rank order, each one joining unless an already-admitted lower
rank neighbor blocks it. The eliminator of an element is the lowest-rank
admitted element of its closed neighborhood, i.e. itself if admitted, else
the blocker that removed it first.

The dynamic kernels never call into this module; it exists so their state
can be checked against an independently computed answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .graph import Graph
from .ranking import RANK_VALUE_MAX, Rank, VertexRanking

EdgeKey = tuple[int, int]


@dataclass(frozen=True)
class MisSolution:
    in_mis: list[bool]
    eliminator: list[int]  # vertex id; eliminator[v] == v iff v is in the set

    def members(self) -> list[int]:
        return [v for v, inside in enumerate(self.in_mis) if inside]

    def size(self) -> int:
        return sum(self.in_mis)


def compute_lfmis(graph: Graph, ranking: VertexRanking) -> MisSolution:
    """Greedy independent set in increasing rank order."""
    if graph.n != ranking.n:
        raise ValueError("graph and ranking disagree on vertex count")
    eliminator = [-1] * graph.n
    in_mis = [False] * graph.n
    adj = graph.adj
    for v in ranking.order:
        if eliminator[v] < 0:
            in_mis[v] = True
            eliminator[v] = v
            for u in adj[v]:
                if eliminator[u] < 0:
                    eliminator[u] = v
    return MisSolution(in_mis, eliminator)


@dataclass(frozen=True)
class MmSolution:
    matched: set[EdgeKey]
    eliminator: dict[EdgeKey, EdgeKey]  # eliminator[e] == e iff e is matched
    vertex_rank: list[Rank | None]  # rank of the matched edge at v, else None

    def size(self) -> int:
        return len(self.matched)


def compute_lfmm(graph: Graph, edge_ranks: Mapping[EdgeKey, Rank]) -> MmSolution:
    """Greedy matching in increasing edge-rank order.

    edge_ranks must cover exactly the present edges (canonical keys).
    """
    if len(edge_ranks) != graph.m:
        raise ValueError("edge_ranks does not cover the edge set")
    by_rank = sorted(edge_ranks.items(), key=lambda item: item[1])
    vertex_rank: list[Rank | None] = [None] * graph.n
    vertex_edge: list[EdgeKey | None] = [None] * graph.n
    matched: set[EdgeKey] = set()
    for e, r in by_rank:
        u, v = e
        if not graph.has_edge(u, v):
            raise ValueError(f"edge_ranks lists absent edge {e}")
        if vertex_rank[u] is None and vertex_rank[v] is None:
            matched.add(e)
            vertex_rank[u] = vertex_rank[v] = r
            vertex_edge[u] = vertex_edge[v] = e
    eliminator: dict[EdgeKey, EdgeKey] = {}
    for e in edge_ranks:
        if e in matched:
            eliminator[e] = e
        else:
            # An unmatched edge always has a lower-rank matched neighbor
            # (otherwise the greedy pass would have admitted it).
            u, v = e
            ru, rv = vertex_rank[u], vertex_rank[v]
            if ru is None:
                blocker = vertex_edge[v]
            elif rv is None or ru < rv:
                blocker = vertex_edge[u]
            else:
                blocker = vertex_edge[v]
            assert blocker is not None
            eliminator[e] = blocker
    return MmSolution(matched, eliminator, vertex_rank)


def residual_vertices(graph: Graph, ranking: VertexRanking, p: float) -> set[int]:
    """Vertices whose eliminator ranks above p on the [0, 1] rank scale.

    These are exactly the vertices the greedy pass has not settled within
    rank prefix p; their induced subgraph has small degree with high
    probability, which the pruning harness measures.
    """
    solution = compute_lfmis(graph, ranking)
    threshold = round(p * RANK_VALUE_MAX)
    values = ranking.values
    return {v for v in range(graph.n) if values[solution.eliminator[v]] > threshold}


def residual_edges(
    graph: Graph, edge_ranks: Mapping[EdgeKey, Rank], p: float
) -> set[EdgeKey]:
    """Matching analogue of residual_vertices, over the edge set."""
    solution = compute_lfmm(graph, edge_ranks)
    threshold = round(p * RANK_VALUE_MAX)
    return {
        e
        for e in edge_ranks
        if edge_ranks[solution.eliminator[e]].value > threshold
    }
