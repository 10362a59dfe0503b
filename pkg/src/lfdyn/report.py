"""Per-update report shared by both dynamic structures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet


@dataclass(frozen=True)
class UpdateReport:
    """What one edge update touched.

    affected holds the elements whose eliminator rank changed, flipped those
    whose membership changed (always a subset). Elements are vertex ids for
    the independent set and canonical edge tuples for the matching; the
    updated edge itself is included when its own state changed.
    relevant_scanned counts neighbor entries scanned, queue_pops the queue
    iterations, elapsed the wall-clock seconds inside the update call.
    """

    affected: FrozenSet
    flipped: FrozenSet
    relevant_scanned: int
    queue_pops: int
    elapsed: float

    def __post_init__(self):
        assert self.flipped <= self.affected
