"""Pure-Python maintenance kernels.

This module and _ckernel.pyx implement the same state machines; the Cython
twin is selected at import when compiled (see _kernel.py). Both follow one
discipline per update:

* pop the pending element of minimum rank, decide in O(|evidence|) whether
  its eliminator really changed, and only then scan its relevant neighbors
  (those whose pre-update eliminator rank is at least the update threshold);
* leave the rank-keyed adjacency collections untouched until the end of the
  loop, so every range scan sees pre-update keys;
* re-key only the scanned pairs afterwards; everything else provably kept
  its side of the partition.

Ranks inside the MIS kernel are dense positions 0..n-1 in the sorted rank
order; adjacency keys pack (position << 32) | vertex. The MM kernel keys
pack the full edge rank above the 64-bit edge id.
"""

from __future__ import annotations

from heapq import heappop, heappush

KIND = "pure"

_ID_MASK = (1 << 32) - 1
_EID_MASK = (1 << 64) - 1

# Above any packed edge rank (those fit in 160 bits).
MM_INF = 1 << 168

_M64 = (1 << 64) - 1
_PRIO_MIX1 = 0xBF58476D1CE4E5B9
_PRIO_MIX2 = 0x94D049BB133111EB


class TreapForest:
    """Many treaps sharing flat node arrays; tree ids index `root`.

    Keys are integers, unique within a tree. insert/discard/search are
    expected O(log size); items_from walks keys >= lo in ascending order in
    O(answer + log size). Node slots are recycled through a free list.
    """

    __slots__ = ("key", "left", "right", "prio", "root", "_free", "_draws")

    def __init__(self, trees: int):
        self.key: list[int] = []
        self.left: list[int] = []
        self.right: list[int] = []
        self.prio: list[int] = []
        self.root = [-1] * trees
        self._free = -1
        self._draws = 0

    def _next_prio(self) -> int:
        # splitmix64 of a counter: deterministic, well scrambled.
        self._draws += 1
        x = self._draws & _M64
        x = ((x ^ (x >> 30)) * _PRIO_MIX1) & _M64
        x = ((x ^ (x >> 27)) * _PRIO_MIX2) & _M64
        return x ^ (x >> 31)

    def _alloc(self, k: int) -> int:
        node = self._free
        if node >= 0:
            self._free = self.left[node]
            self.key[node] = k
            self.left[node] = -1
            self.right[node] = -1
            self.prio[node] = self._next_prio()
            return node
        self.key.append(k)
        self.left.append(-1)
        self.right.append(-1)
        self.prio.append(self._next_prio())
        return len(self.key) - 1

    def has(self, t: int, k: int) -> bool:
        key = self.key
        node = self.root[t]
        while node >= 0:
            nk = key[node]
            if k == nk:
                return True
            node = self.left[node] if k < nk else self.right[node]
        return False

    def _merge(self, a: int, b: int) -> int:
        # All keys in a precede all keys in b; min prio on top.
        if a < 0:
            return b
        if b < 0:
            return a
        if self.prio[a] <= self.prio[b]:
            self.right[a] = self._merge(self.right[a], b)
            return a
        self.left[b] = self._merge(a, self.left[b])
        return b

    def _split(self, node: int, k: int) -> tuple[int, int]:
        # (keys < k, keys >= k)
        if node < 0:
            return -1, -1
        if self.key[node] < k:
            l, r = self._split(self.right[node], k)
            self.right[node] = l
            return node, r
        l, r = self._split(self.left[node], k)
        self.left[node] = r
        return l, node

    def insert(self, t: int, k: int) -> bool:
        """Add key k to tree t; False if it was already present."""
        if self.has(t, k):
            return False
        node = self._alloc(k)
        l, r = self._split(self.root[t], k)
        self.root[t] = self._merge(self._merge(l, node), r)
        return True

    def discard(self, t: int, k: int) -> bool:
        """Remove key k from tree t if present."""
        if not self.has(t, k):
            return False
        l, rest = self._split(self.root[t], k)
        node, r = self._split(rest, k + 1)
        # node is the single-key subtree holding k; recycle it
        self.left[node] = self._free
        self._free = node
        self.root[t] = self._merge(l, r)
        return True

    def items_from(self, t: int, lo: int) -> list[int]:
        """Keys >= lo in ascending order."""
        out: list[int] = []
        key, left, right = self.key, self.left, self.right
        stack: list[int] = []
        node = self.root[t]
        while node >= 0 or stack:
            while node >= 0:
                if key[node] >= lo:
                    stack.append(node)
                    node = left[node]
                else:
                    # node and its whole left subtree are below lo
                    node = right[node]
            if not stack:
                break
            node = stack.pop()
            out.append(key[node])
            node = right[node]
        return out

    def items(self, t: int) -> list[int]:
        return self.items_from(t, 0)


# The compiled twin splits the forest into a 64-bit-key and an object-key
# variant; here one class serves both, so the names alias it.
U64Forest = TreapForest
ObjForest = TreapForest


class MisKernel:
    """Maintains the greedy independent set under one edge change.

    position[v] is v's dense rank (index in increasing rank order), order its
    inverse. m[v] is membership; k[v] the dense rank of v's eliminator.
    `low` holds, per vertex v, neighbors u with k(u) <= k(v) keyed by
    (k(u) << 32) | u; `high` holds neighbors with k(u) >= k(v) keyed by u.
    Equal-k neighbors sit in both. `pending[v]` lists lower-rank neighbors
    that flipped since v was queued.
    """

    def __init__(self, n, position, order, edges):
        if n > _ID_MASK:
            raise ValueError("vertex ids must fit in 32 bits")
        self.n = n
        self.pos = list(position)
        self.order = list(order)
        self.m = bytearray(n)
        self.k = [0] * n
        self.low = TreapForest(n)
        self.high = TreapForest(n)
        self.pending: list[list[int]] = [[] for _ in range(n)]
        self.size = 0
        self._build(edges)

    def _build(self, edges) -> None:
        pos, k, m = self.pos, self.k, self.m
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in range(self.n):
            k[v] = -1
        for v in self.order:
            if k[v] < 0:
                m[v] = 1
                k[v] = pos[v]
                for u in adj[v]:
                    if k[u] < 0:
                        k[u] = pos[v]
        self.size = sum(m)
        low, high = self.low, self.high
        for u, v in edges:
            ku, kv = k[u], k[v]
            if ku <= kv:
                low.insert(v, (ku << 32) | u)
            if ku >= kv:
                high.insert(v, u)
            if kv <= ku:
                low.insert(u, (kv << 32) | v)
            if kv >= ku:
                high.insert(u, v)

    # -- update loop -------------------------------------------------------

    def update(self, inserting: bool, a: int, b: int):
        """Apply one edge change; requires position[a] < position[b].

        The graph-side presence bookkeeping is the caller's job; this runs
        the maintenance loop and returns (affected, flipped, scanned, pops).
        """
        pos, k, pending = self.pos, self.k, self.pending
        thr = pos[a]
        heap = [(pos[b], b)]
        queued = {b}
        affected: list[int] = []
        flipped: list[int] = []
        old_k: dict[int, int] = {}
        hmap: dict[int, list[int]] = {}
        scanned = 0
        pops = 0
        last = -1
        while heap:
            pv, v = heappop(heap)
            pops += 1
            assert pv > last, "queue ranks must strictly increase"
            last = pv
            hit = self._is_affected(v, a, b)
            pending[v].clear()
            if not hit:
                continue
            relevant = self._relevant(v, thr, a, b, inserting)
            scanned += len(relevant)
            hmap[v] = relevant
            affected.append(v)
            old = k[v]
            old_k[v] = old
            if self._update_eliminator(v, relevant):
                flipped.append(v)
                for u in relevant:
                    if pos[u] > pv:
                        pending[u].append(v)
                        if u not in queued:
                            queued.add(u)
                            heappush(heap, (pos[u], u))
            assert k[v] != old, "affected vertex must change eliminator"
        self._apply_adjacency(inserting, a, b, affected, old_k, hmap)
        return affected, flipped, scanned, pops

    def _is_affected(self, v: int, a: int, b: int) -> bool:
        """Did v's eliminator change? O(|pending[v]|).

        For the updated edge's higher endpoint the evidence is the edge
        itself; for anyone else it is the lower neighbors that flipped.
        """
        pos, k, m = self.pos, self.k, self.m
        if v == b:
            return bool(m[a]) and k[b] >= pos[a]
        kv = k[v]
        best = -1
        for u in self.pending[v]:
            pu = pos[u]
            if pu == kv:
                # v's own eliminator flipped (necessarily out of the set)
                return True
            if m[u] and (best < 0 or pu < best):
                best = pu
        return 0 <= best < kv

    def _relevant(self, v: int, thr: int, a: int, b: int, inserting: bool):
        """Neighbors of v whose pre-update eliminator rank is >= thr.

        Reads only pre-update keys: the low tree via a range scan, and the
        high tree wholesale (its members satisfy k(u) >= k(v) >= thr for any
        affected v). The updated edge is not in the trees yet (insert) or
        still is (delete), so the lower endpoint is patched in or out by
        hand when v is the higher endpoint. Equal-k neighbors may appear
        twice; downstream consumers tolerate duplicates.
        """
        low, high = self.low, self.high
        out = [key & _ID_MASK for key in low.items_from(v, thr << 32)]
        out += high.items(v)
        if v == b:
            if inserting:
                if self.m[a]:
                    out.append(a)
            elif out:
                out = [u for u in out if u != a]
        return out

    def _update_eliminator(self, v: int, relevant) -> bool:
        """Recompute v's eliminator from the relevant set; True iff v flipped.

        Only candidates ranked below v count: their membership bits are
        already final, while higher-ranked bits may still be stale.
        """
        pos, k, m = self.pos, self.k, self.m
        pv = pos[v]
        best = -1
        for u in relevant:
            pu = pos[u]
            if pu < pv and m[u] and (best < 0 or pu < best):
                best = pu
        was = m[v]
        if best < 0:
            m[v] = 1
            k[v] = pv
            if not was:
                self.size += 1
                return True
            return False
        m[v] = 0
        k[v] = best
        if was:
            self.size -= 1
            return True
        return False

    def _apply_adjacency(self, inserting, a, b, affected, old_k, hmap):
        """Re-key the scanned pairs (and the updated edge) to post-update k.

        Pairs where both sides changed are visited twice; discard-then-insert
        makes every visit idempotent.
        """
        k, low, high = self.k, self.low, self.high
        if not inserting:
            kb_old = old_k.get(b, k[b])
            ka = k[a]
            low.discard(b, (ka << 32) | a)
            high.discard(b, a)
            low.discard(a, (kb_old << 32) | b)
            high.discard(a, b)
        for v in affected:
            kv_old = old_k[v]
            kv = k[v]
            for u in hmap[v]:
                if v == b and u == a:
                    continue  # the updated edge; handled outside the loop
                ku_old = old_k.get(u, k[u])
                ku = k[u]
                low.discard(u, (kv_old << 32) | v)
                if kv <= ku:
                    low.insert(u, (kv << 32) | v)
                high.discard(u, v)
                if kv >= ku:
                    high.insert(u, v)
                low.discard(v, (ku_old << 32) | u)
                if ku <= kv:
                    low.insert(v, (ku << 32) | u)
                high.discard(v, u)
                if ku >= kv:
                    high.insert(v, u)
        if inserting:
            ka, kb = k[a], k[b]
            if ka <= kb:
                low.insert(b, (ka << 32) | a)
            if ka >= kb:
                high.insert(b, a)
            if kb <= ka:
                low.insert(a, (kb << 32) | b)
            if kb >= ka:
                high.insert(a, b)

    # -- queries and inspection -------------------------------------------

    def in_mis(self, v: int) -> bool:
        return bool(self.m[v])

    def elim_pos(self, v: int) -> int:
        return self.k[v]

    def mis_vector(self) -> bytes:
        return bytes(self.m)

    def elim_vector(self) -> list[int]:
        return list(self.k)

    def low_items(self, v: int) -> list[tuple[int, int]]:
        return [(key >> 32, key & _ID_MASK) for key in self.low.items(v)]

    def high_items(self, v: int) -> list[int]:
        return self.high.items(v)

    def pending_items(self, v: int) -> list[int]:
        return list(self.pending[v])

    def relevant_neighbors(self, v: int, thr: int) -> list[int]:
        """Between updates: neighbors with k(u) >= thr, de-duplicated."""
        k = self.k
        out = {key & _ID_MASK for key in self.low.items_from(v, thr << 32)}
        out.update(u for u in self.high.items(v) if k[u] >= thr)
        return sorted(out)


class MmKernel:
    """Maintains the greedy matching under one edge change.

    Edge ids pack (u << 32) | v with u < v; packed edge ranks sit above the
    id in tree keys, so one range scan per endpoint finds every incident
    edge whose pre-update eliminator rank clears the threshold. vlabel[x]
    is the packed rank of the matched edge at x, MM_INF when unmatched.
    """

    def __init__(self, n: int):
        if n > _ID_MASK:
            raise ValueError("vertex ids must fit in 32 bits")
        self.n = n
        self.vlabel = [MM_INF] * n
        self.rank: dict[int, int] = {}
        self.kmap: dict[int, int] = {}
        self.mset: set[int] = set()
        self.tree = TreapForest(n)

    def bulk_init(self, items) -> None:
        """Load (eid, packed rank) pairs and solve from scratch."""
        vlabel, mset = self.vlabel, self.mset
        for eid, r in sorted(items, key=lambda item: item[1]):
            u, v = eid >> 32, eid & _ID_MASK
            if vlabel[u] == MM_INF and vlabel[v] == MM_INF:
                mset.add(eid)
                vlabel[u] = vlabel[v] = r
        tree, kmap, rank = self.tree, self.kmap, self.rank
        for eid, r in items:
            rank[eid] = r
            if eid in mset:
                ke = r
            else:
                u, v = eid >> 32, eid & _ID_MASK
                ke = min(vlabel[u], vlabel[v])
            kmap[eid] = ke
            key = (ke << 64) | eid
            tree.insert(eid >> 32, key)
            tree.insert(eid & _ID_MASK, key)

    def insert(self, eid: int, prank: int):
        self.rank[eid] = prank
        return self._run(True, eid, prank)

    def delete(self, eid: int):
        return self._run(False, eid, self.rank[eid])

    def _run(self, inserting: bool, fid: int, frank: int):
        vlabel, rank, kmap, mset = self.vlabel, self.rank, self.kmap, self.mset
        fu, fv = fid >> 32, fid & _ID_MASK
        affected = [fid]
        flipped: list[int] = []
        old_k: dict[int, int] = {}
        heap: list[tuple[int, int]] = []
        queued: set[int] = set()
        scanned = 0
        pops = 1
        f_flipped = False
        if inserting:
            x = vlabel[fu]
            if vlabel[fv] < x:
                x = vlabel[fv]
            if x >= frank:
                mset.add(fid)
                kmap[fid] = frank
                vlabel[fu] = vlabel[fv] = frank
                f_flipped = True
            else:
                kmap[fid] = x
        else:
            old_k[fid] = kmap.pop(fid)
            del rank[fid]
            if fid in mset:
                mset.discard(fid)
                if vlabel[fu] == frank:
                    vlabel[fu] = MM_INF
                if vlabel[fv] == frank:
                    vlabel[fv] = MM_INF
                f_flipped = True
        if f_flipped:
            flipped.append(fid)
            relevant = self._incident_from(fu, fv, frank, fid, fid)
            scanned += len(relevant)
            for nid in relevant:
                if rank[nid] > frank and nid not in queued:
                    queued.add(nid)
                    heappush(heap, (rank[nid], nid))
        last = frank
        while heap:
            r, eid = heappop(heap)
            pops += 1
            assert r > last, "queue ranks must strictly increase"
            last = r
            u, v = eid >> 32, eid & _ID_MASK
            x = vlabel[u]
            if vlabel[v] < x:
                x = vlabel[v]
            was = eid in mset
            if x >= r:
                # no strictly lower matched edge at either endpoint
                now = True
                newk = r
            else:
                now = False
                newk = x
            if was != now:
                if now:
                    mset.add(eid)
                    vlabel[u] = vlabel[v] = r
                else:
                    mset.discard(eid)
                    if vlabel[u] == r:
                        vlabel[u] = MM_INF
                    if vlabel[v] == r:
                        vlabel[v] = MM_INF
                flipped.append(eid)
            old = kmap[eid]
            if newk != old:
                kmap[eid] = newk
                affected.append(eid)
                old_k[eid] = old
            if was != now:
                relevant = self._incident_from(u, v, frank, eid, fid)
                scanned += len(relevant)
                for nid in relevant:
                    if rank[nid] > r and nid not in queued:
                        queued.add(nid)
                        heappush(heap, (rank[nid], nid))
        self._apply_adjacency(inserting, fid, affected, old_k)
        return affected, flipped, scanned, pops

    def _incident_from(self, u: int, v: int, thr: int, excl: int, fid: int):
        """Edges at u or v with pre-update k >= thr, minus excl itself.

        excl is the only edge the two endpoint trees can share, so no other
        de-duplication is needed. fid is also dropped: a deleted update edge
        stays in the trees until the re-key phase but is no longer in the
        graph (on insertion it is not in the trees yet, so the filter is
        moot).
        """
        tree = self.tree
        lo = thr << 64
        out = []
        for key in tree.items_from(u, lo):
            eid = key & _EID_MASK
            if eid != excl and eid != fid:
                out.append(eid)
        for key in tree.items_from(v, lo):
            eid = key & _EID_MASK
            if eid != excl and eid != fid:
                out.append(eid)
        return out

    def _apply_adjacency(self, inserting, fid, affected, old_k) -> None:
        tree, kmap = self.tree, self.kmap
        for eid in affected:
            if eid == fid:
                continue
            oldkey = (old_k[eid] << 64) | eid
            newkey = (kmap[eid] << 64) | eid
            u, v = eid >> 32, eid & _ID_MASK
            tree.discard(u, oldkey)
            tree.insert(u, newkey)
            tree.discard(v, oldkey)
            tree.insert(v, newkey)
        fu, fv = fid >> 32, fid & _ID_MASK
        if inserting:
            key = (kmap[fid] << 64) | fid
            tree.insert(fu, key)
            tree.insert(fv, key)
        else:
            key = (old_k[fid] << 64) | fid
            tree.discard(fu, key)
            tree.discard(fv, key)

    # -- queries and inspection -------------------------------------------

    def is_matched(self, eid: int) -> bool:
        return eid in self.mset

    def edge_k(self, eid: int) -> int:
        return self.kmap[eid]

    def edge_rank_packed(self, eid: int) -> int:
        return self.rank[eid]

    def vertex_label(self, v: int) -> int:
        return self.vlabel[v]

    def matching_size(self) -> int:
        return len(self.mset)

    def matched_eids(self) -> set[int]:
        return set(self.mset)

    def incident_items(self, v: int) -> list[tuple[int, int]]:
        return [(key >> 64, key & _EID_MASK) for key in self.tree.items(v)]
