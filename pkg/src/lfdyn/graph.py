"""Undirected simple graph on a fixed vertex set 0..n-1.

Tracks exactly the edge set; the solution-maintenance state lives in the
kernels. Updates are strict: inserting a present edge or deleting an absent
one is an error, so update streams replay exactly or not at all.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    pass


class DuplicateInsert(GraphError):
    """Raised when inserting an edge that is already present."""


class MissingDelete(GraphError):
    """Raised when deleting an edge that is not present."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Canonical form of an undirected edge: endpoints sorted, no loops."""
    if u == v:
        raise GraphError(f"self-loop ({u}, {v}) is not a valid edge")
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.m = 0
        for u, v in edges:
            self.insert(u, v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def has_edge(self, u: int, v: int) -> bool:
        u, v = edge_key(u, v)
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adj[u]

    def insert(self, u: int, v: int) -> tuple[int, int]:
        u, v = edge_key(u, v)
        self._check_vertex(u)
        self._check_vertex(v)
        if v in self.adj[u]:
            raise DuplicateInsert(f"edge ({u}, {v}) already present")
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.m += 1
        return (u, v)

    def delete(self, u: int, v: int) -> tuple[int, int]:
        u, v = edge_key(u, v)
        self._check_vertex(u)
        self._check_vertex(v)
        if v not in self.adj[u]:
            raise MissingDelete(f"edge ({u}, {v}) not present")
        self.adj[u].remove(v)
        self.adj[v].remove(u)
        self.m -= 1
        return (u, v)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> set[int]:
        self._check_vertex(v)
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All present edges in canonical form, grouped by lower endpoint."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g.m = self.m
        g.adj = [set(s) for s in self.adj]
        return g
