"""Pivot clustering read off the maintained independent set.

Every vertex's cluster id is its eliminator: set members anchor clusters
(each is its own pivot) and every other vertex sits with the member that
eliminated it, which is by construction an adjacent, lower-rank pivot. No
extra state: the clustering is a view of DynamicMis, and one update changes
exactly the affected vertices' cluster ids (ranks are distinct, so a new
eliminator rank always means a new pivot identity).
"""

from __future__ import annotations

from .mis import DynamicMis
from .report import UpdateReport


def cluster_of(index: DynamicMis, v: int) -> int:
    """Cluster id of v: the pivot (eliminator) vertex."""
    return index.eliminator(v)


def clusters(index: DynamicMis) -> dict[int, list[int]]:
    """All clusters as pivot -> sorted members (pivot included)."""
    out: dict[int, list[int]] = {}
    for v in range(index.n):
        out.setdefault(index.eliminator(v), []).append(v)
    return out


def cluster_changes(report: UpdateReport) -> int:
    """How many vertices changed cluster id in the preceding update."""
    return len(report.affected)
