"""Fully dynamic maximal independent set.

DynamicMis keeps, for a fixed vertex set and seed-drawn ranking, exactly the
independent set the greedy rank-order pass would produce on the current
graph, together with each vertex's eliminator (the lowest-rank set member in
its closed neighborhood). Updates touch only vertices whose eliminator
actually changes, which is what makes them fast; equivalence with the
from-scratch greedy is a maintained invariant, not a goal.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from ._kernel import resolve
from .graph import Graph
from .ranking import Rank, VertexRanking, new_vertex_ranking
from .report import UpdateReport


@dataclass(frozen=True)
class VertexState:
    """Snapshot of one vertex's maintained state (for tests and debugging)."""

    member: bool
    eliminator_rank: Rank
    lower: tuple[tuple[Rank, int], ...]  # (k(u), u) ascending
    higher: tuple[int, ...]
    pending: tuple[int, ...]


class DynamicMis:
    def __init__(
        self,
        n: int,
        seed: int,
        edges=(),
        kernel: str = "auto",
    ):
        self.ranking: VertexRanking = new_vertex_ranking(n, seed)
        self.graph = Graph(n, edges)
        impl = resolve(kernel)
        self.kernel_kind: str = impl.KIND
        self._k = impl.MisKernel(
            n, self.ranking.position, self.ranking.order, list(self.graph.edges())
        )

    @property
    def n(self) -> int:
        return self.graph.n

    # -- updates ------------------------------------------------------------

    def insert_edge(self, u: int, v: int) -> UpdateReport:
        t0 = time.perf_counter_ns()
        u, v = self.graph.insert(u, v)
        return self._update(True, u, v, t0)

    def delete_edge(self, u: int, v: int) -> UpdateReport:
        t0 = time.perf_counter_ns()
        u, v = self.graph.delete(u, v)
        return self._update(False, u, v, t0)

    def _update(self, inserting: bool, u: int, v: int, t0: int) -> UpdateReport:
        pos = self.ranking.position
        a, b = (u, v) if pos[u] < pos[v] else (v, u)
        affected, flipped, scanned, pops = self._k.update(inserting, a, b)
        elapsed = (time.perf_counter_ns() - t0) / 1e9
        return UpdateReport(frozenset(affected), frozenset(flipped), scanned, pops, elapsed)

    # -- queries ------------------------------------------------------------

    def in_mis(self, v: int) -> bool:
        return self._k.in_mis(v)

    def eliminator(self, v: int) -> int:
        """The vertex whose admission settled v (v itself when in the set)."""
        return self.ranking.order[self._k.elim_pos(v)]

    def eliminator_rank(self, v: int) -> Rank:
        return self.ranking.rank(self.eliminator(v))

    def mis_members(self) -> list[int]:
        return [v for v in range(self.n) if self._k.in_mis(v)]

    def mis_size(self) -> int:
        return self._k.size

    def relevant_neighbors(self, v: int, threshold: Rank | None) -> list[int]:
        """Neighbors whose current eliminator rank is >= threshold.

        None means no bound (all neighbors). Callable between updates; the
        update loop runs the same scan against pre-update keys internally.
        """
        thr = self.ranking.threshold_position(threshold)
        return self._k.relevant_neighbors(v, thr)

    def state(self, v: int) -> VertexState:
        ranking = self.ranking
        lower = tuple(
            (ranking.rank(ranking.order[kpos]), u) for kpos, u in self._k.low_items(v)
        )
        return VertexState(
            member=self._k.in_mis(v),
            eliminator_rank=self.eliminator_rank(v),
            lower=lower,
            higher=tuple(self._k.high_items(v)),
            pending=tuple(self._k.pending_items(v)),
        )

    # -- structural audit ----------------------------------------------------

    def check_invariants(self) -> list[str]:
        """Structural self-check; returns human-readable violations (none = ok).

        Verifies membership/eliminator consistency, that the two adjacency
        collections partition each neighborhood by current eliminator rank
        with fresh keys and sorted order, cross-collection symmetry, that no
        pending notes linger between updates, and that the current set is
        independent and maximal on the current graph.
        """
        k = self._k
        n = self.n
        pos = self.ranking.position
        bad: list[str] = []
        elim = k.elim_vector()
        member = [k.in_mis(v) for v in range(n)]
        for v in range(n):
            if member[v] != (elim[v] == pos[v]):
                bad.append(f"vertex {v}: membership bit disagrees with eliminator")
        if k.size != sum(member):
            bad.append("size counter disagrees with membership bits")
        low_sets: list[set[int]] = []
        high_sets: list[set[int]] = []
        for v in range(n):
            low = k.low_items(v)
            high = k.high_items(v)
            keys = [kpos for kpos, _ in low]
            if keys != sorted(keys):
                bad.append(f"vertex {v}: low collection out of order")
            for kpos, u in low:
                if kpos != elim[u]:
                    bad.append(f"vertex {v}: stale key for {u} in low collection")
            low_ids = {u for _, u in low}
            high_ids = set(high)
            adj = self.graph.adj[v]
            want_low = {u for u in adj if elim[u] <= elim[v]}
            want_high = {u for u in adj if elim[u] >= elim[v]}
            if low_ids != want_low:
                bad.append(f"vertex {v}: low collection holds {low_ids}, want {want_low}")
            if high_ids != want_high:
                bad.append(f"vertex {v}: high collection holds {high_ids}, want {want_high}")
            if k.pending_items(v):
                bad.append(f"vertex {v}: pending notes left between updates")
            low_sets.append(low_ids)
            high_sets.append(high_ids)
        for v in range(n):
            for u in high_sets[v]:
                if v not in low_sets[u]:
                    bad.append(f"symmetry: {u} in high({v}) but {v} not in low({u})")
        for v in range(n):
            if member[v]:
                for u in self.graph.adj[v]:
                    if member[u]:
                        bad.append(f"edge ({v}, {u}) inside the independent set")
            elif not any(member[u] for u in self.graph.adj[v]):
                bad.append(f"vertex {v}: outside the set with no member neighbor")
        return bad
