"""Random greedy ranks.

Every vertex (and, in matching mode, every inserted edge) gets a rank: a
64-bit value drawn uniformly by hashing (seed, owner), plus the owner's
identity as a tiebreak. Ranks are compared lexicographically on
(value, tiebreak), which makes the order a strict total order even on the
astronomically unlikely value collision, and makes the greedy solutions a
pure function of (seed, graph) regardless of update history.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import NamedTuple

_M64 = (1 << 64) - 1

#: Largest possible rank value (values are uniform on [0, RANK_VALUE_MAX]).
RANK_VALUE_MAX = _M64

# splitmix64 increment and finalizer constants.
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# Domain separators so vertex and edge draws never share a stream.
_VERTEX_TAG = 0x76657274
_EDGE_TAG = 0x65646765


def _mix64(x: int) -> int:
    """splitmix64 finalizer: a bijective scramble of a 64-bit word."""
    x &= _M64
    x = ((x ^ (x >> 30)) * _MIX1) & _M64
    x = ((x ^ (x >> 27)) * _MIX2) & _M64
    return x ^ (x >> 31)


class Rank(NamedTuple):
    """A draw from the rank order: 64-bit value plus owner tiebreak.

    Tuple ordering gives the lexicographic (value, tiebreak) comparison.
    The tiebreak is the vertex id for vertex ranks and (u, v, nonce) for
    edge ranks; ranks are only ever compared within one domain.
    """

    value: int
    tiebreak: object


def compare(a: Rank, b: Rank) -> int:
    """Three-way rank comparison: -1 if a < b, 0 if equal, 1 if a > b."""
    if a < b:
        return -1
    if a == b:
        return 0
    return 1


def vertex_rank_value(seed: int, v: int) -> int:
    """The 64-bit rank value of vertex v under this seed."""
    base = _mix64(seed ^ _VERTEX_TAG)
    return _mix64(base + (v + 1) * _GAMMA)


def edge_rank_value(seed: int, u: int, v: int, nonce: int) -> int:
    """The 64-bit rank value of the nonce-th insertion of edge (u, v)."""
    base = _mix64(seed ^ _EDGE_TAG)
    h = _mix64(base + (u + 1) * _GAMMA)
    h = _mix64(h ^ ((v + 1) * _GAMMA & _M64))
    return _mix64(h + nonce * _GAMMA)


def draw_edge_rank(edge: tuple[int, int], nonce: int, seed: int) -> Rank:
    """Rank for the nonce-th insertion of an edge; a pure function.

    nonce counts prior insertions of the same edge key, so a re-inserted
    edge draws a fresh rank while replays stay deterministic.
    """
    u, v = edge
    return Rank(edge_rank_value(seed, u, v, nonce), (u, v, nonce))


# Packed integer encodings. Fixed field widths make integer order on the
# packed form identical to lexicographic order on (value, tiebreak); the
# kernels compare packed integers only.

_ID_BITS = 32
_ID_MASK = (1 << _ID_BITS) - 1


def pack_vertex_rank(value: int, v: int) -> int:
    return (value << _ID_BITS) | v


def pack_edge_rank(value: int, u: int, v: int, nonce: int) -> int:
    return (((((value << _ID_BITS) | u) << _ID_BITS) | v) << _ID_BITS) | nonce


def unpack_edge_rank(packed: int) -> Rank:
    nonce = packed & _ID_MASK
    v = (packed >> _ID_BITS) & _ID_MASK
    u = (packed >> (2 * _ID_BITS)) & _ID_MASK
    return Rank(packed >> (3 * _ID_BITS), (u, v, nonce))


class VertexRanking:
    """Immutable ranking of vertices 0..n-1, drawn from a seed.

    Besides per-vertex Rank lookup this precomputes the sorted order once:
    position(v) is v's index in increasing rank order and order[i] is its
    inverse, the two encodings the maintenance kernels run on.
    """

    __slots__ = ("n", "seed", "values", "position", "order", "_sorted_packed")

    def __init__(self, n: int, seed: int):
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        if n > _ID_MASK:
            raise ValueError(f"n must fit in {_ID_BITS} bits, got {n}")
        self.n = n
        self.seed = seed
        self.values = [vertex_rank_value(seed, v) for v in range(n)]
        packed = sorted(pack_vertex_rank(self.values[v], v) for v in range(n))
        self._sorted_packed = packed
        self.order = [p & _ID_MASK for p in packed]
        self.position = [0] * n
        for i, v in enumerate(self.order):
            self.position[v] = i

    def __len__(self) -> int:
        return self.n

    def rank(self, v: int) -> Rank:
        return Rank(self.values[v], v)

    def vertex_at(self, pos: int) -> int:
        """Inverse of position: the vertex holding the pos-th lowest rank."""
        return self.order[pos]

    def threshold_position(self, threshold: Rank | None) -> int:
        """Number of vertices ranked strictly below threshold.

        None means no bound (position 0). Accepts any Rank with an integer
        tiebreak; a vertex's own rank maps to its position.
        """
        if threshold is None:
            return 0
        return bisect_left(
            self._sorted_packed, pack_vertex_rank(threshold.value, threshold.tiebreak)
        )


def new_vertex_ranking(n: int, seed: int) -> VertexRanking:
    """Draw the ranking of n vertices for this seed."""
    return VertexRanking(n, seed)
