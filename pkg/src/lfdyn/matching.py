"""Fully dynamic maximal matching.

The same scheme as DynamicMis run on edges: every inserted edge draws a rank
(fresh per re-insertion, deterministic under replay), the maintained
matching is exactly the greedy rank-order matching of the current edge set,
and per-vertex labels record the rank of the incident matched edge so the
admit/evict decision for an edge is one min and one comparison.
"""

from __future__ import annotations

import time

from ._kernel import resolve
from ._pykernel import MM_INF
from .graph import Graph, GraphError, edge_key
from .ranking import Rank, edge_rank_value, pack_edge_rank, unpack_edge_rank
from .report import UpdateReport

EdgeKey = tuple[int, int]

_ID_MASK = (1 << 32) - 1


def _eid(e: EdgeKey) -> int:
    return (e[0] << 32) | e[1]


def _ekey(eid: int) -> EdgeKey:
    return (eid >> 32, eid & _ID_MASK)


class DynamicMatching:
    def __init__(self, n: int, seed: int, edges=(), kernel: str = "auto"):
        self.seed = seed
        self.graph = Graph(n, edges)
        self.nonce: dict[EdgeKey, int] = {}
        impl = resolve(kernel)
        self.kernel_kind: str = impl.KIND
        self._k = impl.MmKernel(n)
        items = []
        for e in self.graph.edges():
            self.nonce[e] = 1
            items.append((_eid(e), self._packed_rank(e, 0)))
        self._k.bulk_init(items)

    def _packed_rank(self, e: EdgeKey, nonce: int) -> int:
        u, v = e
        return pack_edge_rank(edge_rank_value(self.seed, u, v, nonce), u, v, nonce)

    @property
    def n(self) -> int:
        return self.graph.n

    # -- updates ------------------------------------------------------------

    def insert_edge(self, u: int, v: int) -> UpdateReport:
        t0 = time.perf_counter_ns()
        e = self.graph.insert(u, v)
        used = self.nonce.get(e, 0)
        self.nonce[e] = used + 1
        result = self._k.insert(_eid(e), self._packed_rank(e, used))
        return self._report(result, t0)

    def delete_edge(self, u: int, v: int) -> UpdateReport:
        t0 = time.perf_counter_ns()
        e = self.graph.delete(u, v)
        return self._report(self._k.delete(_eid(e)), t0)

    def _report(self, result, t0: int) -> UpdateReport:
        affected, flipped, scanned, pops = result
        elapsed = (time.perf_counter_ns() - t0) / 1e9
        return UpdateReport(
            frozenset(_ekey(eid) for eid in affected),
            frozenset(_ekey(eid) for eid in flipped),
            scanned,
            pops,
            elapsed,
        )

    # -- queries ------------------------------------------------------------

    def _present_eid(self, u: int, v: int) -> int:
        e = edge_key(u, v)
        if not self.graph.has_edge(u, v):
            raise GraphError(f"edge {e} not present")
        return _eid(e)

    def is_matched(self, u: int, v: int) -> bool:
        return self._k.is_matched(self._present_eid(u, v))

    def edge_rank(self, u: int, v: int) -> Rank:
        return unpack_edge_rank(self._k.edge_rank_packed(self._present_eid(u, v)))

    def eliminator_rank(self, u: int, v: int) -> Rank:
        """Rank of the lowest-rank matched edge touching (u, v), or its own."""
        return unpack_edge_rank(self._k.edge_k(self._present_eid(u, v)))

    def vertex_match_rank(self, v: int) -> Rank | None:
        """Rank of the matched edge at v, or None when v is unmatched."""
        label = self._k.vertex_label(v)
        return None if label == MM_INF else unpack_edge_rank(label)

    def matching(self) -> list[EdgeKey]:
        return sorted(_ekey(eid) for eid in self._k.matched_eids())

    def matching_size(self) -> int:
        return self._k.matching_size()

    def edge_ranks(self) -> dict[EdgeKey, Rank]:
        """Current rank of every present edge (oracle-comparison input)."""
        return {
            e: unpack_edge_rank(self._k.edge_rank_packed(_eid(e)))
            for e in self.graph.edges()
        }

    # -- structural audit ----------------------------------------------------

    def check_invariants(self) -> list[str]:
        """Structural self-check; returns human-readable violations (none = ok)."""
        k = self._k
        bad: list[str] = []
        matched = k.matched_eids()
        present = {_eid(e) for e in self.graph.edges()}
        if not matched <= present:
            bad.append("matched edges not all present")
        for eid in present:
            rank = k.edge_rank_packed(eid)
            ke = k.edge_k(eid)
            if (eid in matched) != (ke == rank):
                bad.append(f"edge {_ekey(eid)}: matched bit disagrees with k")
            if ke > rank:
                bad.append(f"edge {_ekey(eid)}: eliminator ranks above the edge")
        label_want = [MM_INF] * self.n
        for eid in matched:
            u, v = _ekey(eid)
            r = k.edge_rank_packed(eid)
            for x in (u, v):
                if label_want[x] != MM_INF:
                    bad.append(f"vertex {x}: two matched edges")
                label_want[x] = min(label_want[x], r)
        for x in range(self.n):
            if k.vertex_label(x) != label_want[x]:
                bad.append(f"vertex {x}: match label stale")
        for x in range(self.n):
            items = k.incident_items(x)
            keys = [ke for ke, _ in items]
            if keys != sorted(keys):
                bad.append(f"vertex {x}: incident collection out of order")
            ids = set()
            for ke, eid in items:
                ids.add(eid)
                if eid not in present:
                    bad.append(f"vertex {x}: absent edge {_ekey(eid)} in collection")
                elif ke != k.edge_k(eid):
                    bad.append(f"vertex {x}: stale key for edge {_ekey(eid)}")
            want = {_eid(edge_key(x, y)) for y in self.graph.adj[x]}
            if ids != want:
                bad.append(f"vertex {x}: incident collection holds wrong edge set")
        for e in self.graph.edges():
            u, v = e
            if (
                _eid(e) not in matched
                and k.vertex_label(u) == MM_INF
                and k.vertex_label(v) == MM_INF
            ):
                bad.append(f"edge {e}: both endpoints free (matching not maximal)")
        return bad
