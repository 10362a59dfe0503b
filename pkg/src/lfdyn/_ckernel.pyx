# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled maintenance kernels; the Cython twin of _pykernel.

Same state machines and the same public surface, with C storage: the MIS
kernel runs entirely on 64-bit keys (dense rank positions packed over vertex
ids), the MM kernel keeps its arbitrary-width packed ranks as Python ints
inside an object-keyed treap but runs the loop at C level. Semantics must
match _pykernel exactly; the black-box test suite is parametrized over both.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t
from libcpp.vector cimport vector

from cpython.bytes cimport PyBytes_FromStringAndSize

from heapq import heappop, heappush

from ._pykernel import MM_INF

KIND = "c"

cdef uint64_t _PRIO_MIX1 = 0xBF58476D1CE4E5B9ULL
cdef uint64_t _PRIO_MIX2 = 0x94D049BB133111EBULL
cdef uint64_t _LOW32 = 0xFFFFFFFFULL

_EID_MASK = (1 << 64) - 1


cdef inline void _heap_push(vector[uint64_t]& h, uint64_t item):
    h.push_back(item)
    cdef size_t i = h.size() - 1
    cdef size_t p
    while i > 0:
        p = (i - 1) >> 1
        if h[p] <= item:
            break
        h[i] = h[p]
        i = p
    h[i] = item


cdef inline uint64_t _heap_pop(vector[uint64_t]& h):
    cdef uint64_t top = h[0]
    cdef uint64_t last = h.back()
    h.pop_back()
    cdef size_t n = h.size()
    cdef size_t i = 0
    cdef size_t c
    if n:
        while True:
            c = 2 * i + 1
            if c >= n:
                break
            if c + 1 < n and h[c + 1] < h[c]:
                c += 1
            if h[c] < last:
                h[i] = h[c]
                i = c
            else:
                break
        h[i] = last
    return top


cdef class U64Forest:
    """Treap forest over 64-bit keys; see _pykernel.TreapForest."""

    cdef vector[uint64_t] key
    cdef vector[int32_t] left
    cdef vector[int32_t] right
    cdef vector[uint64_t] prio
    cdef vector[int32_t] root
    cdef int32_t free_head
    cdef uint64_t draws

    def __cinit__(self, int trees):
        self.root.assign(trees, -1)
        self.free_head = -1
        self.draws = 0

    cdef uint64_t _next_prio(self):
        self.draws += 1
        cdef uint64_t x = self.draws
        x = (x ^ (x >> 30)) * _PRIO_MIX1
        x = (x ^ (x >> 27)) * _PRIO_MIX2
        return x ^ (x >> 31)

    cdef int32_t _alloc(self, uint64_t k):
        cdef int32_t node = self.free_head
        if node >= 0:
            self.free_head = self.left[node]
            self.key[node] = k
            self.left[node] = -1
            self.right[node] = -1
            self.prio[node] = self._next_prio()
            return node
        self.key.push_back(k)
        self.left.push_back(-1)
        self.right.push_back(-1)
        self.prio.push_back(self._next_prio())
        return <int32_t> (self.key.size() - 1)

    cdef bint chas(self, int t, uint64_t k):
        cdef int32_t node = self.root[t]
        cdef uint64_t nk
        while node >= 0:
            nk = self.key[node]
            if k == nk:
                return True
            node = self.left[node] if k < nk else self.right[node]
        return False

    cdef int32_t _merge(self, int32_t a, int32_t b):
        if a < 0:
            return b
        if b < 0:
            return a
        if self.prio[a] <= self.prio[b]:
            self.right[a] = self._merge(self.right[a], b)
            return a
        self.left[b] = self._merge(a, self.left[b])
        return b

    cdef void _split(self, int32_t node, uint64_t k, int32_t* lo, int32_t* hi):
        cdef int32_t l, r
        if node < 0:
            lo[0] = -1
            hi[0] = -1
            return
        if self.key[node] < k:
            self._split(self.right[node], k, &l, &r)
            self.right[node] = l
            lo[0] = node
            hi[0] = r
        else:
            self._split(self.left[node], k, &l, &r)
            self.left[node] = r
            lo[0] = l
            hi[0] = node

    cdef bint cinsert(self, int t, uint64_t k):
        if self.chas(t, k):
            return False
        cdef int32_t node = self._alloc(k)
        cdef int32_t l, r
        self._split(self.root[t], k, &l, &r)
        self.root[t] = self._merge(self._merge(l, node), r)
        return True

    cdef bint cdiscard(self, int t, uint64_t k):
        if not self.chas(t, k):
            return False
        cdef int32_t l, rest, node, r
        self._split(self.root[t], k, &l, &rest)
        self._split(rest, k + 1, &node, &r)
        self.left[node] = self.free_head
        self.free_head = node
        self.root[t] = self._merge(l, r)
        return True

    cdef void _collect_from(self, int t, uint64_t lo, vector[uint64_t]& out):
        cdef vector[int32_t] stack
        cdef int32_t node = self.root[t]
        while node >= 0 or stack.size() > 0:
            while node >= 0:
                if self.key[node] >= lo:
                    stack.push_back(node)
                    node = self.left[node]
                else:
                    node = self.right[node]
            if stack.size() == 0:
                break
            node = stack.back()
            stack.pop_back()
            out.push_back(self.key[node])
            node = self.right[node]

    # Python-level surface (tests, audits)

    def insert(self, int t, k):
        return self.cinsert(t, <uint64_t> k)

    def discard(self, int t, k):
        return self.cdiscard(t, <uint64_t> k)

    def has(self, int t, k):
        return self.chas(t, <uint64_t> k)

    def items_from(self, int t, lo):
        cdef vector[uint64_t] out
        self._collect_from(t, <uint64_t> lo, out)
        return [out[i] for i in range(out.size())]

    def items(self, int t):
        return self.items_from(t, 0)


cdef class ObjForest:
    """Treap forest keyed by arbitrary-precision Python ints."""

    cdef list key
    cdef vector[int32_t] left
    cdef vector[int32_t] right
    cdef vector[uint64_t] prio
    cdef vector[int32_t] root
    cdef int32_t free_head
    cdef uint64_t draws

    def __cinit__(self, int trees):
        self.key = []
        self.root.assign(trees, -1)
        self.free_head = -1
        self.draws = 0

    cdef uint64_t _next_prio(self):
        self.draws += 1
        cdef uint64_t x = self.draws
        x = (x ^ (x >> 30)) * _PRIO_MIX1
        x = (x ^ (x >> 27)) * _PRIO_MIX2
        return x ^ (x >> 31)

    cdef int32_t _alloc(self, object k):
        cdef int32_t node = self.free_head
        if node >= 0:
            self.free_head = self.left[node]
            self.key[node] = k
            self.left[node] = -1
            self.right[node] = -1
            self.prio[node] = self._next_prio()
            return node
        self.key.append(k)
        self.left.push_back(-1)
        self.right.push_back(-1)
        self.prio.push_back(self._next_prio())
        return <int32_t> (len(self.key) - 1)

    cdef bint chas(self, int t, object k):
        cdef int32_t node = self.root[t]
        cdef object nk
        while node >= 0:
            nk = self.key[node]
            if k == nk:
                return True
            node = self.left[node] if k < nk else self.right[node]
        return False

    cdef int32_t _merge(self, int32_t a, int32_t b):
        if a < 0:
            return b
        if b < 0:
            return a
        if self.prio[a] <= self.prio[b]:
            self.right[a] = self._merge(self.right[a], b)
            return a
        self.left[b] = self._merge(a, self.left[b])
        return b

    cdef void _split(self, int32_t node, object k, int32_t* lo, int32_t* hi):
        cdef int32_t l, r
        if node < 0:
            lo[0] = -1
            hi[0] = -1
            return
        if self.key[node] < k:
            self._split(self.right[node], k, &l, &r)
            self.right[node] = l
            lo[0] = node
            hi[0] = r
        else:
            self._split(self.left[node], k, &l, &r)
            self.left[node] = r
            lo[0] = l
            hi[0] = node

    cdef bint cinsert(self, int t, object k):
        if self.chas(t, k):
            return False
        cdef int32_t node = self._alloc(k)
        cdef int32_t l, r
        self._split(self.root[t], k, &l, &r)
        self.root[t] = self._merge(self._merge(l, node), r)
        return True

    cdef bint cdiscard(self, int t, object k):
        if not self.chas(t, k):
            return False
        cdef int32_t l, rest, node, r
        self._split(self.root[t], k, &l, &rest)
        self._split(rest, k + 1, &node, &r)
        self.key[node] = None
        self.left[node] = self.free_head
        self.free_head = node
        self.root[t] = self._merge(l, r)
        return True

    cdef void _collect_from(self, int t, object lo, list out):
        cdef vector[int32_t] stack
        cdef int32_t node = self.root[t]
        while node >= 0 or stack.size() > 0:
            while node >= 0:
                if self.key[node] >= lo:
                    stack.push_back(node)
                    node = self.left[node]
                else:
                    node = self.right[node]
            if stack.size() == 0:
                break
            node = stack.back()
            stack.pop_back()
            out.append(self.key[node])
            node = self.right[node]

    # Python-level surface

    def insert(self, int t, k):
        return self.cinsert(t, k)

    def discard(self, int t, k):
        return self.cdiscard(t, k)

    def has(self, int t, k):
        return self.chas(t, k)

    def items_from(self, int t, lo):
        out: list = []
        self._collect_from(t, lo, out)
        return out

    def items(self, int t):
        return self.items_from(t, 0)


TreapForest = U64Forest


cdef class MisKernel:
    """Compiled twin of _pykernel.MisKernel; same fields and methods."""

    cdef readonly int n
    cdef vector[int64_t] pos
    cdef vector[int64_t] order
    cdef vector[int64_t] k
    cdef vector[char] m
    cdef readonly U64Forest low
    cdef readonly U64Forest high
    cdef readonly list pending
    cdef readonly long long size
    # per-update scratch, preallocated once
    cdef vector[char] queued
    cdef vector[char] in_aff
    cdef vector[int64_t] oldk_of

    def __init__(self, n, position, order, edges):
        if n > <long long> _LOW32:
            raise ValueError("vertex ids must fit in 32 bits")
        self.n = n
        self.pos.resize(n)
        self.order.resize(n)
        self.k.resize(n)
        self.m.assign(n, 0)
        cdef int i
        for i in range(n):
            self.pos[i] = position[i]
            self.order[i] = order[i]
            self.k[i] = -1
        self.low = U64Forest(n)
        self.high = U64Forest(n)
        self.pending = [[] for _ in range(n)]
        self.queued.assign(n, 0)
        self.in_aff.assign(n, 0)
        self.oldk_of.assign(n, 0)
        self._build(edges)

    cdef void _build(self, object edges):
        cdef vector[vector[int32_t]] adj
        adj.resize(self.n)
        cdef int u, v, x
        cdef int64_t kv, ku
        cdef list elist = [(int(e[0]), int(e[1])) for e in edges]
        for e in elist:
            u = e[0]
            v = e[1]
            adj[u].push_back(v)
            adj[v].push_back(u)
        cdef size_t j
        cdef long long count = 0
        for x in range(self.n):
            v = <int> self.order[x]
            if self.k[v] < 0:
                self.m[v] = 1
                self.k[v] = self.pos[v]
                count += 1
                for j in range(adj[v].size()):
                    u = adj[v][j]
                    if self.k[u] < 0:
                        self.k[u] = self.pos[v]
        self.size = count
        for e in elist:
            u = e[0]
            v = e[1]
            ku = self.k[u]
            kv = self.k[v]
            if ku <= kv:
                self.low.cinsert(v, (<uint64_t> ku << 32) | <uint64_t> u)
            if ku >= kv:
                self.high.cinsert(v, <uint64_t> u)
            if kv <= ku:
                self.low.cinsert(u, (<uint64_t> kv << 32) | <uint64_t> v)
            if kv >= ku:
                self.high.cinsert(u, <uint64_t> v)

    # -- update loop -------------------------------------------------------

    cpdef update(self, bint inserting, int a, int b):
        cdef int64_t thr = self.pos[a]
        cdef vector[uint64_t] heap
        cdef vector[int32_t] touched
        cdef vector[int32_t] aff
        cdef vector[int32_t] flips
        cdef vector[int32_t] hbuf
        cdef vector[size_t] hofs
        cdef long long scanned = 0
        cdef long long pops = 0
        cdef int64_t last = -1
        cdef int64_t pv, old
        cdef int v, u
        cdef size_t j, hstart
        cdef uint64_t item
        cdef bint hit
        cdef list pend
        _heap_push(heap, (<uint64_t> self.pos[b] << 32) | <uint64_t> b)
        self.queued[b] = 1
        touched.push_back(b)
        while heap.size() > 0:
            item = _heap_pop(heap)
            pv = <int64_t> (item >> 32)
            v = <int> (item & _LOW32)
            pops += 1
            if pv <= last:
                raise AssertionError("queue ranks must strictly increase")
            last = pv
            hit = self._is_affected_c(v, a, b)
            pend = <list> self.pending[v]
            if len(pend):
                pend.clear()
            if not hit:
                continue
            hstart = hbuf.size()
            self._relevant_c(v, thr, a, b, inserting, hstart, hbuf)
            scanned += hbuf.size() - hstart
            aff.push_back(v)
            old = self.k[v]
            self.in_aff[v] = 1
            self.oldk_of[v] = old
            if self._update_eliminator_c(v, hbuf, hstart):
                flips.push_back(v)
                for j in range(hstart, hbuf.size()):
                    u = hbuf[j]
                    if self.pos[u] > pv:
                        (<list> self.pending[u]).append(v)
                        if not self.queued[u]:
                            self.queued[u] = 1
                            touched.push_back(u)
                            _heap_push(
                                heap,
                                (<uint64_t> self.pos[u] << 32) | <uint64_t> u,
                            )
            hofs.push_back(hbuf.size())
            if self.k[v] == old:
                raise AssertionError("affected vertex must change eliminator")
        self._apply_adjacency_c(inserting, a, b, aff, hbuf, hofs)
        for j in range(touched.size()):
            self.queued[touched[j]] = 0
        for j in range(aff.size()):
            self.in_aff[aff[j]] = 0
        affected = [aff[j] for j in range(aff.size())]
        flipped = [flips[j] for j in range(flips.size())]
        return affected, flipped, scanned, pops

    cdef bint _is_affected_c(self, int v, int a, int b):
        if v == b:
            return self.m[a] != 0 and self.k[b] >= self.pos[a]
        cdef int64_t kv = self.k[v]
        cdef int64_t best = -1
        cdef int64_t pu
        cdef int u
        for obj in <list> self.pending[v]:
            u = <int> obj
            pu = self.pos[u]
            if pu == kv:
                return True
            if self.m[u] != 0 and (best < 0 or pu < best):
                best = pu
        return 0 <= best < kv

    cdef void _relevant_c(
        self,
        int v,
        int64_t thr,
        int a,
        int b,
        bint inserting,
        size_t hstart,
        vector[int32_t]& out,
    ):
        cdef vector[uint64_t] tmp
        cdef size_t i
        cdef size_t w
        self.low._collect_from(v, <uint64_t> thr << 32, tmp)
        for i in range(tmp.size()):
            out.push_back(<int32_t> (tmp[i] & _LOW32))
        tmp.clear()
        self.high._collect_from(v, 0, tmp)
        for i in range(tmp.size()):
            out.push_back(<int32_t> tmp[i])
        if v == b:
            if inserting:
                if self.m[a] != 0:
                    out.push_back(a)
            else:
                w = hstart
                for i in range(hstart, out.size()):
                    if out[i] != a:
                        out[w] = out[i]
                        w += 1
                out.resize(w)

    cdef bint _update_eliminator_c(self, int v, vector[int32_t]& H, size_t hstart):
        cdef int64_t pv = self.pos[v]
        cdef int64_t best = -1
        cdef int64_t pu
        cdef int u
        cdef size_t j
        cdef bint was = self.m[v] != 0
        for j in range(hstart, H.size()):
            u = H[j]
            pu = self.pos[u]
            if pu < pv and self.m[u] != 0 and (best < 0 or pu < best):
                best = pu
        if best < 0:
            self.m[v] = 1
            self.k[v] = pv
            if not was:
                self.size += 1
                return True
            return False
        self.m[v] = 0
        self.k[v] = best
        if was:
            self.size -= 1
            return True
        return False

    cdef void _apply_adjacency_c(
        self,
        bint inserting,
        int a,
        int b,
        vector[int32_t]& aff,
        vector[int32_t]& hbuf,
        vector[size_t]& hofs,
    ):
        cdef int64_t ka, kb, kv, kv_old, ku, ku_old
        cdef int v, u
        cdef size_t idx, j, start
        if not inserting:
            kb = self.oldk_of[b] if self.in_aff[b] else self.k[b]
            ka = self.k[a]
            self.low.cdiscard(b, (<uint64_t> ka << 32) | <uint64_t> a)
            self.high.cdiscard(b, <uint64_t> a)
            self.low.cdiscard(a, (<uint64_t> kb << 32) | <uint64_t> b)
            self.high.cdiscard(a, <uint64_t> b)
        start = 0
        for idx in range(aff.size()):
            v = aff[idx]
            kv_old = self.oldk_of[v]
            kv = self.k[v]
            for j in range(start, hofs[idx]):
                u = hbuf[j]
                if v == b and u == a:
                    continue
                ku_old = self.oldk_of[u] if self.in_aff[u] else self.k[u]
                ku = self.k[u]
                self.low.cdiscard(u, (<uint64_t> kv_old << 32) | <uint64_t> v)
                if kv <= ku:
                    self.low.cinsert(u, (<uint64_t> kv << 32) | <uint64_t> v)
                self.high.cdiscard(u, <uint64_t> v)
                if kv >= ku:
                    self.high.cinsert(u, <uint64_t> v)
                self.low.cdiscard(v, (<uint64_t> ku_old << 32) | <uint64_t> u)
                if ku <= kv:
                    self.low.cinsert(v, (<uint64_t> ku << 32) | <uint64_t> u)
                self.high.cdiscard(v, <uint64_t> u)
                if ku >= kv:
                    self.high.cinsert(v, <uint64_t> u)
            start = hofs[idx]
        if inserting:
            ka = self.k[a]
            kb = self.k[b]
            if ka <= kb:
                self.low.cinsert(b, (<uint64_t> ka << 32) | <uint64_t> a)
            if ka >= kb:
                self.high.cinsert(b, <uint64_t> a)
            if kb <= ka:
                self.low.cinsert(a, (<uint64_t> kb << 32) | <uint64_t> b)
            if kb >= ka:
                self.high.cinsert(a, <uint64_t> b)

    # -- subroutine surface for white-box tests ------------------------------

    def _is_affected(self, int v, int a, int b):
        return self._is_affected_c(v, a, b)

    def _relevant(self, int v, thr, int a, int b, bint inserting):
        cdef vector[int32_t] out
        self._relevant_c(v, <int64_t> thr, a, b, inserting, 0, out)
        return [out[i] for i in range(out.size())]

    def _update_eliminator(self, int v, relevant):
        cdef vector[int32_t] H
        for u in relevant:
            H.push_back(<int32_t> u)
        return self._update_eliminator_c(v, H, 0)

    # -- queries and inspection -------------------------------------------

    def in_mis(self, int v):
        return self.m[v] != 0

    def elim_pos(self, int v):
        return self.k[v]

    def mis_vector(self):
        if self.n == 0:
            return b""
        return PyBytes_FromStringAndSize(<char*> self.m.data(), self.n)

    def elim_vector(self):
        return [self.k[i] for i in range(self.n)]

    def low_items(self, int v):
        cdef vector[uint64_t] tmp
        self.low._collect_from(v, 0, tmp)
        return [(tmp[i] >> 32, tmp[i] & _LOW32) for i in range(tmp.size())]

    def high_items(self, int v):
        cdef vector[uint64_t] tmp
        self.high._collect_from(v, 0, tmp)
        return [<int> tmp[i] for i in range(tmp.size())]

    def pending_items(self, int v):
        return list(<list> self.pending[v])

    def relevant_neighbors(self, int v, thr):
        cdef int64_t cthr = thr
        cdef vector[uint64_t] tmp
        self.low._collect_from(v, <uint64_t> cthr << 32, tmp)
        out = {<int> (tmp[i] & _LOW32) for i in range(tmp.size())}
        tmp.clear()
        self.high._collect_from(v, 0, tmp)
        cdef int u
        cdef size_t i
        for i in range(tmp.size()):
            u = <int> tmp[i]
            if self.k[u] >= cthr:
                out.add(u)
        return sorted(out)


cdef class MmKernel:
    """Compiled twin of _pykernel.MmKernel; same fields and methods."""

    cdef readonly int n
    cdef readonly list vlabel
    cdef readonly dict rank
    cdef readonly dict kmap
    cdef readonly set mset
    cdef readonly ObjForest tree

    def __init__(self, int n):
        if n > <long long> _LOW32:
            raise ValueError("vertex ids must fit in 32 bits")
        self.n = n
        self.vlabel = [MM_INF] * n
        self.rank = {}
        self.kmap = {}
        self.mset = set()
        self.tree = ObjForest(n)

    def bulk_init(self, items):
        cdef list vlabel = self.vlabel
        cdef int64_t u, v
        for eid, r in sorted(items, key=lambda item: item[1]):
            u = <int64_t> (eid >> 32)
            v = <int64_t> (eid & 0xFFFFFFFF)
            if vlabel[u] == MM_INF and vlabel[v] == MM_INF:
                self.mset.add(eid)
                vlabel[u] = r
                vlabel[v] = r
        for eid, r in items:
            self.rank[eid] = r
            u = <int> (eid >> 32)
            v = <int> (eid & 0xFFFFFFFF)
            if eid in self.mset:
                ke = r
            else:
                ke = min(vlabel[u], vlabel[v])
            self.kmap[eid] = ke
            key = (ke << 64) | eid
            self.tree.cinsert(u, key)
            self.tree.cinsert(v, key)

    def insert(self, eid, prank):
        self.rank[eid] = prank
        return self._run(True, eid, prank)

    def delete(self, eid):
        return self._run(False, eid, self.rank[eid])

    cdef _run(self, bint inserting, object fid, object frank):
        cdef list vlabel = self.vlabel
        cdef dict rank = self.rank
        cdef dict kmap = self.kmap
        cdef set mset = self.mset
        cdef int64_t fu = <int64_t> (fid >> 32)
        cdef int64_t fv = <int64_t> (fid & 0xFFFFFFFF)
        cdef list affected = [fid]
        cdef list flipped = []
        cdef dict old_k = {}
        cdef list heap = []
        cdef set queued = set()
        cdef long long scanned = 0
        cdef long long pops = 1
        cdef bint f_flipped = False
        cdef bint was, now
        cdef int64_t u, v
        if inserting:
            x = vlabel[fu]
            if vlabel[fv] < x:
                x = vlabel[fv]
            if x >= frank:
                mset.add(fid)
                kmap[fid] = frank
                vlabel[fu] = frank
                vlabel[fv] = frank
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
            if r <= last:
                raise AssertionError("queue ranks must strictly increase")
            last = r
            u = <int64_t> (eid >> 32)
            v = <int64_t> (eid & 0xFFFFFFFF)
            x = vlabel[u]
            if vlabel[v] < x:
                x = vlabel[v]
            was = eid in mset
            if x >= r:
                now = True
                newk = r
            else:
                now = False
                newk = x
            if was != now:
                if now:
                    mset.add(eid)
                    vlabel[u] = r
                    vlabel[v] = r
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

    cdef list _incident_from(self, int64_t u, int64_t v, object thr, object excl, object fid):
        cdef list out = []
        cdef list keys = []
        lo = thr << 64
        self.tree._collect_from(<int> u, lo, keys)
        self.tree._collect_from(<int> v, lo, keys)
        for key in keys:
            eid = key & _EID_MASK
            if eid != excl and eid != fid:
                out.append(eid)
        return out

    cdef void _apply_adjacency(self, bint inserting, object fid, list affected, dict old_k):
        cdef int64_t u, v, fu, fv
        for eid in affected:
            if eid == fid:
                continue
            oldkey = (old_k[eid] << 64) | eid
            newkey = (self.kmap[eid] << 64) | eid
            u = <int64_t> (eid >> 32)
            v = <int64_t> (eid & 0xFFFFFFFF)
            self.tree.cdiscard(<int> u, oldkey)
            self.tree.cinsert(<int> u, newkey)
            self.tree.cdiscard(<int> v, oldkey)
            self.tree.cinsert(<int> v, newkey)
        fu = <int64_t> (fid >> 32)
        fv = <int64_t> (fid & 0xFFFFFFFF)
        if inserting:
            key = (self.kmap[fid] << 64) | fid
            self.tree.cinsert(<int> fu, key)
            self.tree.cinsert(<int> fv, key)
        else:
            key = (old_k[fid] << 64) | fid
            self.tree.cdiscard(<int> fu, key)
            self.tree.cdiscard(<int> fv, key)

    # -- queries and inspection -------------------------------------------

    def is_matched(self, eid):
        return eid in self.mset

    def edge_k(self, eid):
        return self.kmap[eid]

    def edge_rank_packed(self, eid):
        return self.rank[eid]

    def vertex_label(self, int v):
        return self.vlabel[v]

    def matching_size(self):
        return len(self.mset)

    def matched_eids(self):
        return set(self.mset)

    def incident_items(self, int v):
        cdef list keys = []
        self.tree._collect_from(v, 0, keys)
        return [(key >> 64, key & _EID_MASK) for key in keys]
