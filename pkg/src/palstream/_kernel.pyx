# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the compressed engine's hot path.

This module re-implements, in C types, exactly the bookkeeping that
``engine_compressed.CompressedEngine`` performs in Python: the landmark
store, the power-of-two partition, sparse and dense segment descriptors,
periodic zones, and the merge machinery.  Given the same hash point it
produces the same answer stream, check for check, as the pure-Python
engine; the differential tests assert this.  Fingerprint arithmetic runs
on 64-bit words with 128-bit intermediate products over p = 2^61 - 1.

The pure-Python classes remain the readable reference; consult their
docstrings for the invariants.  Anything subtle here is a transcription,
not a redesign.
"""

from libc.stdlib cimport calloc, free, malloc, realloc
from libc.string cimport memmove

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    """
    typedef unsigned long long ks_u64;
    #define KS_P 0x1FFFFFFFFFFFFFFFULL /* 2^61 - 1 */
    static inline ks_u64 ks_mulmod(ks_u64 a, ks_u64 b) {
        unsigned __int128 t = (unsigned __int128)a * b;
        ks_u64 s = (ks_u64)(t & KS_P) + (ks_u64)(t >> 61);
        s = (s & KS_P) + (s >> 61);
        if (s >= KS_P) s -= KS_P;
        return s;
    }
    static inline ks_u64 ks_addmod(ks_u64 a, ks_u64 b) {
        ks_u64 s = a + b;
        if (s >= KS_P) s -= KS_P;
        return s;
    }
    static inline ks_u64 ks_submod(ks_u64 a, ks_u64 b) {
        return a >= b ? a - b : a + KS_P - b;
    }
    static inline int ks_ctz(ks_u64 x) { return __builtin_ctzll(x); }
    """
    u64 KS_P
    u64 ks_mulmod(u64 a, u64 b) nogil
    u64 ks_addmod(u64 a, u64 b) nogil
    u64 ks_submod(u64 a, u64 b) nogil
    int ks_ctz(u64 x) nogil

DEF MAXL = 40          # levels
DEF MAXEXP = 40        # partition exponents
DEF MAXRING = 8        # segments per exponent (invariant: at most 6)
DEF MAXSEG = 512       # live segments overall
DEF MAXALIVE = 8       # sparse entries per segment (invariant: at most 4)
DEF BUFSZ = 5
DEF MAXBUF = 8
DEF MAXENT = 32        # merge scratch: entries from both sides
DEF MAXDONE = 1024     # per-step candidate dedupe scratch
DEF GHOST_MULT = 4


cdef struct Alive:
    i64 c
    i64 r

cdef struct Cache:
    int lam
    i64 b              # -1 = unbounded level
    u64 gpow
    u64 mod
    u64 inv
    i64 step
    i64 al
    i64 ar
    bint left_open
    bint right_closed
    bint has_zone
    i64 next_h

cdef struct Seg:
    i64 start
    i64 end
    int exp
    bint inert
    i64 next_h
    int kind           # 0 sparse, 1 dense
    int n_alive
    Alive alive[MAXALIVE]
    i64 anchor
    i64 p
    int n_buf
    Alive buf[MAXBUF]
    int n_caches
    Cache caches[MAXL]


cdef inline i64 gcd64(i64 a, i64 b) nogil:
    while b:
        a, b = b, a % b
    return a


cdef inline u64 inv_pow2(u64 a, u64 mod) nogil:
    # inverse of odd a modulo a power of two, by Newton iteration
    cdef u64 v = 1
    cdef int i
    for i in range(6):
        v = v * (2 - a * v)
    return v & (mod - 1)


cdef inline i64 stop_centre(i64 l, i64 r) nogil:
    cdef i64 v = (l + r + 1) // 2 - l + 1
    return v if v > 0 else 0


cdef class NativeEngine:
    """C implementation of the compressed engine; see the Python twin."""

    # hash state
    cdef u64 x, x_inv, fwd, rev, pw, ipw
    cdef public i64 h
    # landmark levels
    cdef int n_levels, top
    cdef i64 bs[MAXL]          # -1 = unbounded
    cdef i64 caps[MAXL]        # retained slots incl. ghosts; -1 = unbounded
    cdef u64 *arr[MAXL]        # 4 words per entry
    cdef i64 arr_alloc[MAXL]   # allocated entries for the unbounded level
    # partition counts, run-length encoded
    cdef i64 gval[MAXEXP + 8]
    cdef i64 grun[MAXEXP + 8]
    cdef int n_groups
    # per-exponent segment queues
    cdef Seg *ring[MAXEXP][MAXRING]
    cdef int ring_n[MAXEXP]
    cdef int n_exps
    # segment pool
    cdef Seg *pool
    cdef Seg *freelist[MAXSEG]
    cdef int n_free
    # configuration
    cdef i64 maxreach          # -1 = unlimited
    cdef int small_family
    cdef int assoc_n[MAXEXP]
    cdef int assoc[MAXEXP][MAXL]
    # results and counters
    cdef public i64 best
    cdef public u64 checks
    cdef public u64 densifies
    cdef public u64 zone_stalls
    cdef i64 done_buf[MAXDONE]
    cdef i64 _peak_entries
    cdef i64 _aux_peak

    def __cinit__(self, levels, u64 x, u64 x_inv, maxreach, assoc, int small_family):
        """levels: ascending (lam, b-or-None); assoc: per-exponent level tuples."""
        cdef int i, j
        self.x = x
        self.x_inv = x_inv
        self.fwd = 0
        self.rev = 0
        self.pw = 1
        self.ipw = 1
        self.h = 0
        self.best = 0
        self.checks = 0
        self.densifies = 0
        self.zone_stalls = 0
        self._peak_entries = 0
        self._aux_peak = 0
        self.n_levels = len(levels)
        if self.n_levels < 1 or self.n_levels > MAXL:
            raise ValueError("unsupported level count")
        for i, (lam, b) in enumerate(levels):
            if lam != i:
                raise ValueError("levels must be uniform 0..top")
            if b is None:
                self.bs[i] = -1
                self.caps[i] = -1
                self.arr_alloc[i] = 64
                self.arr[i] = <u64 *>malloc(64 * 4 * sizeof(u64))
            else:
                self.bs[i] = b
                self.caps[i] = b * GHOST_MULT if b * GHOST_MULT > b else b
                self.arr_alloc[i] = self.caps[i]
                self.arr[i] = <u64 *>calloc(self.caps[i] * 4, sizeof(u64))
            if self.arr[i] == NULL:
                raise MemoryError()
        self.top = self.n_levels - 1
        self.n_groups = 0
        self.n_exps = 0
        for i in range(MAXEXP):
            self.ring_n[i] = 0
        self.pool = <Seg *>calloc(MAXSEG, sizeof(Seg))
        if self.pool == NULL:
            raise MemoryError()
        for i in range(MAXSEG):
            self.freelist[i] = &self.pool[MAXSEG - 1 - i]
        self.n_free = MAXSEG
        self.maxreach = -1 if maxreach is None else maxreach
        self.small_family = small_family
        for i in range(MAXEXP):
            self.assoc_n[i] = 0
        for i, lams in enumerate(assoc):
            if i >= MAXEXP:
                break
            self.assoc_n[i] = len(lams)
            for j, lam in enumerate(lams):
                self.assoc[i][j] = lam

    def __dealloc__(self):
        cdef int i
        for i in range(self.n_levels):
            if self.arr[i] != NULL:
                free(self.arr[i])
        if self.pool != NULL:
            free(self.pool)

    # -- landmark store -----------------------------------------------------

    cdef void _advance(self, u64 a) except *:
        cdef u64 *dst
        cdef i64 h, j, cap
        cdef int tz, lam
        self.fwd = ks_addmod(self.fwd, ks_mulmod(a, self.pw))
        self.rev = ks_addmod(ks_mulmod(self.rev, self.x), a % KS_P)
        self.pw = ks_mulmod(self.pw, self.x)
        self.ipw = ks_mulmod(self.ipw, self.x_inv)
        self.h += 1
        h = self.h
        tz = ks_ctz(<u64>h)
        if tz > self.top:
            tz = self.top
        for lam in range(tz + 1):
            cap = self.caps[lam]
            j = h >> lam
            if cap < 0:
                if j > self.arr_alloc[lam]:
                    self.arr_alloc[lam] = self.arr_alloc[lam] * 2
                    self.arr[lam] = <u64 *>realloc(
                        self.arr[lam], self.arr_alloc[lam] * 4 * sizeof(u64))
                    if self.arr[lam] == NULL:
                        raise MemoryError()
                dst = self.arr[lam] + (j - 1) * 4
            else:
                dst = self.arr[lam] + (j % cap) * 4
            dst[0] = self.fwd
            dst[1] = self.rev
            dst[2] = self.pw
            dst[3] = self.ipw

    cdef u64 *_raw_lookup(self, i64 y, bint ghost) nogil:
        """Entry of position y, or NULL.  y == 0 and y == h handled by callers
        that need them; this helper serves the period tests (y >= 0)."""
        cdef int lam
        cdef i64 j, cap, limit
        if y <= 0 or y > self.h:
            return NULL
        lam = ks_ctz(<u64>y)
        if lam > self.top:
            lam = self.top
        j = y >> lam
        cap = self.caps[lam]
        if cap < 0:
            return self.arr[lam] + (j - 1) * 4
        limit = cap if ghost else self.bs[lam]
        if (self.h >> lam) - j >= limit:
            return NULL
        return self.arr[lam] + (j % cap) * 4

    cdef int _is_period_over(self, i64 a, i64 b, i64 q) nogil:
        """1/0 for q a period of T[a+1..b] or not, -1 when landmarks are
        missing; ghost entries allowed (zone bookkeeping only)."""
        cdef u64 fa, ia, fa_q, ia_q, fb, fb_q, left, right
        cdef u64 *e
        if q <= 0 or a + q > b or a < 0 or b > self.h:
            return -1
        if a == 0:
            fa = 0; ia = 1
        else:
            e = self._raw_lookup(a, True)
            if e == NULL:
                return -1
            fa = e[0]; ia = e[3]
        e = self._raw_lookup(a + q, True)
        if e == NULL:
            return -1
        fa_q = e[0]; ia_q = e[3]
        if b == self.h:
            fb = self.fwd
        else:
            e = self._raw_lookup(b, True)
            if e == NULL:
                return -1
            fb = e[0]
        e = self._raw_lookup(b - q, True)
        if e == NULL:
            if b - q == 0:
                fb_q = 0
            elif b - q == self.h:
                fb_q = self.fwd
            else:
                return -1
        else:
            fb_q = e[0]
        left = ks_mulmod(ks_submod(fb, fa_q), ia_q)
        right = ks_mulmod(ks_submod(fb_q, fa), ia)
        return 1 if left == right else 0

    # -- partition ----------------------------------------------------------

    cdef void _counts_add(self, int k, int delta) nogil:
        cdef int ri = 0, pos = 0, off, extra, t
        cdef i64 value, run
        while ri < self.n_groups and pos + self.grun[ri] <= k:
            pos += <int>self.grun[ri]
            ri += 1
        if ri == self.n_groups:
            self.gval[ri] = delta
            self.grun[ri] = 1
            self.n_groups += 1
        else:
            value = self.gval[ri]
            run = self.grun[ri]
            off = k - pos
            # split [value, run] into up to three pieces around position off
            extra = (1 if off else 0) + (1 if run - off - 1 else 0)
            for t in range(self.n_groups - 1, ri, -1):
                self.gval[t + extra] = self.gval[t]
                self.grun[t + extra] = self.grun[t]
            self.n_groups += extra
            t = ri
            if off:
                self.gval[t] = value
                self.grun[t] = off
                t += 1
            self.gval[t] = value + delta
            self.grun[t] = 1
            if run - off - 1:
                self.gval[t + 1] = value
                self.grun[t + 1] = run - off - 1
            ri = t
        if ri + 1 < self.n_groups and self.gval[ri] == self.gval[ri + 1]:
            self.grun[ri] += self.grun[ri + 1]
            for t in range(ri + 1, self.n_groups - 1):
                self.gval[t] = self.gval[t + 1]
                self.grun[t] = self.grun[t + 1]
            self.n_groups -= 1
        if ri > 0 and self.gval[ri - 1] == self.gval[ri]:
            self.grun[ri - 1] += self.grun[ri]
            for t in range(ri, self.n_groups - 1):
                self.gval[t] = self.gval[t + 1]
                self.grun[t] = self.grun[t + 1]
            self.n_groups -= 1

    cdef Seg *_seg_new(self) except NULL:
        if self.n_free == 0:
            raise MemoryError("segment pool exhausted")
        self.n_free -= 1
        return self.freelist[self.n_free]

    cdef void _seg_free(self, Seg *s) nogil:
        self.freelist[self.n_free] = s
        self.n_free += 1

    cdef void _ring_append(self, int exp, Seg *s) nogil:
        self.ring[exp][self.ring_n[exp]] = s
        self.ring_n[exp] += 1
        if exp + 1 > self.n_exps:
            self.n_exps = exp + 1

    cdef Seg *_ring_popleft(self, int exp) nogil:
        cdef Seg *s = self.ring[exp][0]
        cdef int i
        self.ring_n[exp] -= 1
        for i in range(self.ring_n[exp]):
            self.ring[exp][i] = self.ring[exp][i + 1]
        return s

    # -- merging ------------------------------------------------------------

    cdef inline bint _runnable(self, i64 c, i64 h) nogil:
        cdef i64 y = 2 * c - h - 2
        return y >= 0 and (self.maxreach < 0 or h - y <= self.maxreach)

    cdef Seg *_merge(self, Seg *left, Seg *right, int new_exp) except NULL:
        cdef i64 h = self.h
        cdef i64 thr = (<i64>1) << new_exp
        cdef Alive entries[MAXENT]
        cdef Alive extra[MAXENT]
        cdef Seg *carried[2]
        cdef int n_entries = 0, n_extra = 0, n_carried = 0
        cdef int i, j, k, n_qual
        cdef Seg *side
        cdef Seg *seg
        cdef Alive tmp
        cdef i64 anchor, p, half, g, r
        cdef int two = 2

        for k in range(two):
            side = left if k == 0 else right
            if side.kind == 0:
                for i in range(side.n_alive):
                    if self._runnable(side.alive[i].c, h):
                        entries[n_entries] = side.alive[i]
                        n_entries += 1
            else:
                n_qual = 0
                for i in range(side.n_buf):
                    if side.buf[i].r >= thr:
                        n_qual += 1
                # qualifying buffer entries, sorted by centre (insertion sort)
                j = n_entries
                for i in range(side.n_buf):
                    if side.buf[i].r >= thr:
                        entries[n_entries] = side.buf[i]
                        n_entries += 1
                for i in range(j + 1, n_entries):
                    tmp = entries[i]
                    while i > j and entries[i - 1].c > tmp.c:
                        entries[i] = entries[i - 1]
                        i -= 1
                    entries[i] = tmp
                if n_qual > 4:
                    carried[n_carried] = side
                    n_carried += 1
                    for i in range(side.n_buf):
                        extra[n_extra] = side.buf[i]
                        n_extra += 1
                else:
                    # survivors(): exactly the qualifying entries remain
                    pass

        seg = self._seg_new()
        seg.start = left.start
        seg.end = right.end
        seg.exp = new_exp
        seg.inert = False
        seg.next_h = 0
        if n_carried == 0 and n_entries <= 4:
            seg.kind = 0
            seg.n_alive = n_entries
            for i in range(n_entries):
                seg.alive[i] = entries[i]
            self._seg_free(left)
            self._seg_free(right)
            return seg

        # densify: the common period forced by the verified radii
        g = 0
        for i in range(1, n_entries):
            g = gcd64(g, entries[i].c - entries[i - 1].c)
        anchor = entries[0].c
        p = 2 * g
        for i in range(n_carried):
            p = gcd64(p, carried[i].p)
        half = p >> 1
        anchor -= ((anchor - left.start) // half) * half

        # buffer pool: best radius per centre, first seen order, top 5 by radius
        cdef Alive unique[2 * MAXENT]
        cdef int n_unique = 0
        cdef bint fresh
        for i in range(n_entries + n_extra):
            tmp = entries[i] if i < n_entries else extra[i - n_entries]
            fresh = True
            for j in range(n_unique):
                if unique[j].c == tmp.c:
                    if tmp.r > unique[j].r:
                        unique[j].r = tmp.r
                    fresh = False
                    break
            if fresh:
                unique[n_unique] = tmp
                n_unique += 1
        # stable insertion sort by radius, descending
        for i in range(1, n_unique):
            tmp = unique[i]
            j = i
            while j > 0 and unique[j - 1].r < tmp.r:
                unique[j] = unique[j - 1]
                j -= 1
            unique[j] = tmp
        seg.kind = 1
        seg.anchor = anchor
        seg.p = p
        seg.n_buf = n_unique if n_unique < BUFSZ else BUFSZ
        for i in range(seg.n_buf):
            seg.buf[i] = unique[i]
        self._build_caches(seg, h)
        self.densifies += 1
        self._seg_free(left)
        self._seg_free(right)
        return seg

    cdef void _build_caches(self, Seg *seg, i64 h0) nogil:
        cdef int tz = ks_ctz(<u64>seg.p)
        cdef int i, lam, g
        cdef Cache *c
        cdef i64 delta, length
        seg.n_caches = 0
        length = seg.end - seg.start + 1
        for i in range(self.assoc_n[seg.exp]):
            lam = self.assoc[seg.exp][i]
            g = tz if tz < lam else lam
            c = &seg.caches[seg.n_caches]
            seg.n_caches += 1
            c.lam = lam
            c.b = self.bs[lam]
            c.gpow = (<u64>1) << g
            c.mod = (<u64>1) << (lam - g)
            c.step = seg.p << (lam - g)   # p * mod = lcm(2^lam, p)
            c.inv = inv_pow2(<u64>(seg.p >> g), c.mod) if c.mod > 1 else 1
            delta = (2 * seg.anchor - 2 - h0) % (<i64>c.gpow)
            if delta < 0:
                delta += <i64>c.gpow
            c.next_h = h0 + delta
            c.al = 0
            c.ar = 0
            c.left_open = False
            c.right_closed = False
            c.has_zone = False
            if length // c.step + 1 > self.small_family:
                self._build_zone(seg, c, h0)

    # -- periodic zones -----------------------------------------------------

    cdef void _build_zone(self, Seg *seg, Cache *c, i64 h0) nogil:
        cdef i64 mask = ((<i64>1) << c.lam) - 1
        cdef i64 s0 = (seg.start - 1 + mask) & ~mask
        cdef i64 step = c.step
        cdef i64 amax, a, lo, hi, mid, cap, jlo, lo_pos, acap
        c.has_zone = True
        amax = (h0 - s0) // step
        if amax < 1:
            c.al = s0
            c.ar = s0
            c.left_open = True
            c.right_closed = False
            return
        lo = 1
        hi = amax
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if self._is_period_over(s0, s0 + mid * step, step) == 1:
                lo = mid
            else:
                hi = mid - 1
        a = lo
        c.ar = s0 + a * step
        c.right_closed = a < amax
        if c.b < 0:
            lo_pos = 0
        else:
            cap = c.b * GHOST_MULT
            if cap < c.b:
                cap = c.b
            jlo = (h0 >> c.lam) - cap + 1
            lo_pos = (jlo << c.lam) if jlo > 0 else 0
        acap = (s0 - lo_pos) // step
        if acap <= 0:
            c.al = s0
            c.left_open = True
            return
        lo = 0
        hi = acap
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if self._is_period_over(s0 - mid * step, s0 + step, step) == 1:
                lo = mid
            else:
                hi = mid - 1
        c.al = s0 - lo * step
        c.left_open = lo == acap

    cdef void _extend_zone(self, Cache *c, i64 h) nogil:
        cdef i64 step, ar
        cdef int chk
        if c.right_closed:
            return
        step = c.step
        ar = c.ar
        while ar + step <= h:
            chk = self._is_period_over(ar - step, ar + step, step)
            if chk < 0:
                self.zone_stalls += 1
                break
            if chk == 1:
                ar += step
            else:
                c.right_closed = True
                break
        c.ar = ar

    # -- the step -----------------------------------------------------------

    cpdef i64 push(self, u64 a) except -1:
        cdef i64 h, best
        cdef int i, e, n, merge_i
        cdef Seg *seg
        cdef Seg *lefts
        cdef Seg *rights
        self._advance(a)
        h = self.h

        # a fresh unit segment, then at most one partition merge
        seg = self._seg_new()
        seg.start = h
        seg.end = h
        seg.exp = 0
        seg.inert = False
        seg.next_h = 0
        seg.kind = 0
        seg.n_alive = 1
        seg.alive[0].c = h
        seg.alive[0].r = 0
        self._ring_append(0, seg)
        self._counts_add(0, 1)
        merge_i = -1
        if self.gval[0] == 5:
            merge_i = 0
        elif self.gval[0] == 4 and self.n_groups > 1 and self.gval[1] == 5:
            merge_i = <int>self.grun[0]
        if merge_i >= 0:
            self._counts_add(merge_i, -2)
            self._counts_add(merge_i + 1, 1)
            lefts = self._ring_popleft(merge_i)
            rights = self._ring_popleft(merge_i)
            self._ring_append(merge_i + 1, self._merge(lefts, rights, merge_i + 1))

        best = self.best
        # mirror position 0 is a permanent landmark: check the whole prefix
        if not (h & 1) and h > 2 * best and self.fwd == self.rev:
            best = h >> 1
        for e in range(self.n_exps):
            n = self.ring_n[e]
            for i in range(n):
                seg = self.ring[e][i]
                if seg.inert or h < seg.next_h:
                    continue
                if seg.kind == 0:
                    if seg.n_alive:
                        best = self._step_sparse(seg, h, best)
                    else:
                        seg.inert = True
                else:
                    if seg.n_caches:
                        best = self._step_dense(seg, h, best)
                    else:
                        seg.inert = True
        self.best = best
        if not (h & 63):
            self._note_aux_peak()
        return best

    cdef i64 _step_sparse(self, Seg *seg, i64 h, i64 best) nogil:
        cdef i64 thr = (<i64>1) << (seg.exp + 1)
        cdef i64 c, y, r, j
        cdef int i = 0, lam, k
        cdef u64 *e
        cdef u64 lhs
        while i < seg.n_alive:
            c = seg.alive[i].c
            y = 2 * c - h - 2
            if y <= 0 or (self.maxreach >= 0 and h - y > self.maxreach):
                # mirror 0 is handled globally; past it the centre is dead
                seg.n_alive -= 1
                for k in range(i, seg.n_alive):
                    seg.alive[k] = seg.alive[k + 1]
                continue
            r = (h - y) >> 1
            if r <= best and r < thr:
                # cannot improve the answer nor matter at the next merge
                i += 1
                continue
            lam = ks_ctz(<u64>y)
            if lam > self.top:
                lam = self.top
            j = y >> lam
            if self.caps[lam] < 0:
                e = self.arr[lam] + (j - 1) * 4
            elif (h >> lam) - j >= self.bs[lam]:
                i += 1
                continue
            else:
                e = self.arr[lam] + (j % self.caps[lam]) * 4
            self.checks += 1
            lhs = ks_addmod(ks_submod(self.fwd, e[0]),
                            ks_submod(ks_mulmod(e[1], self.pw),
                                      ks_mulmod(self.rev, e[2])))
            if lhs == 0:
                seg.alive[i].r = r
                if r > best:
                    best = r
                i += 1
            else:
                # failed once = dead forever
                seg.n_alive -= 1
                for k in range(i, seg.n_alive):
                    seg.alive[k] = seg.alive[k + 1]
        return best

    cdef i64 _step_dense(self, Seg *seg, i64 h, i64 best) nogil:
        cdef i64 end = seg.end
        cdef i64 anchor = seg.anchor
        cdef i64 half_p = seg.p >> 1
        cdef i64 thr = (<i64>1) << (seg.exp + 1)
        cdef i64 y_max = 2 * end - h - 2
        cdef i64 y_keep = h - (thr << 1)
        cdef i64 alt = h - 2 * best - 1
        cdef i64 y_lo, y_hi, c_hi, c_lo, step, base, base1, m
        cdef i64 lo_t, hi_t, t, c, y, r, j, lcap, lz, l_est, r_est
        cdef i64 f0, f1, f2, f3, fmin, fmax, min_next
        cdef u64 alpha0
        cdef int ci, fam, lam, k, hits, n_done = 0, wi
        cdef bint dup
        cdef Cache *cache
        cdef u64 *e
        cdef u64 lhs
        if alt > y_keep:
            y_keep = alt
        for ci in range(seg.n_caches):
            cache = &seg.caches[ci]
            if h < cache.next_h:
                continue
            cache.next_h = h + <i64>cache.gpow
            if cache.b < 0:
                y_lo = 0
                if y_max < 0:
                    cache.lam = -1      # dead: mirrors are gone for good
                    continue
            else:
                y_lo = ((h >> cache.lam) - cache.b + 1) << cache.lam
                if y_lo < 0:
                    y_lo = 0
                if y_max < y_lo:
                    cache.lam = -1
                    continue
            y_hi = y_max if y_max < y_keep else y_keep
            if y_hi < y_lo:
                continue
            c_hi = (y_hi + h + 2) >> 1
            if cache.mod > 1:
                alpha0 = ((<u64>((h + 2 - 2 * anchor) >> ks_ctz(cache.gpow)))
                          * cache.inv) & (cache.mod - 1)
            else:
                alpha0 = 0
            step = cache.step
            base1 = anchor + <i64>alpha0 * half_p
            c_lo = (y_lo + h + 3) >> 1
            for fam in range(2):
                base = base1 if fam == 0 else base1 + (step >> 1)
                if c_lo > base:
                    base += ((c_lo - base + step - 1) // step) * step
                if base > c_hi:
                    continue
                m = (c_hi - base) // step + 1
                if m <= self.small_family:
                    lo_t = 0
                    hi_t = m - 1
                else:
                    if not cache.has_zone:
                        self._build_zone(seg, cache, h)
                    self._extend_zone(cache, h)
                    lcap = (h + 2 - base) // step
                    lz = (base - 1 - cache.al) // step
                    l_est = lz if lz < lcap else lcap
                    if l_est < 0:
                        l_est = 0
                    r_est = (cache.ar - base + 1) // step
                    if r_est < 0:
                        r_est = 0
                    f0 = stop_centre(l_est, r_est)
                    f1 = stop_centre(l_est + 1, r_est)
                    f2 = stop_centre(l_est, r_est + 1)
                    f3 = stop_centre(l_est + 1, r_est + 1)
                    fmin = f0
                    if f1 < fmin: fmin = f1
                    if f2 < fmin: fmin = f2
                    if f3 < fmin: fmin = f3
                    fmax = f0
                    if f1 > fmax: fmax = f1
                    if f2 > fmax: fmax = f2
                    if f3 > fmax: fmax = f3
                    lo_t = fmin - 2
                    if lo_t < 0:
                        lo_t = 0
                    hi_t = fmax + 3
                    if hi_t > m - 1:
                        hi_t = m - 1
                hits = 0
                for t in range(lo_t, hi_t + 1):
                    c = base + t * step
                    y = 2 * c - h - 2
                    if y <= 0:
                        continue
                    dup = False
                    for k in range(n_done):
                        if self.done_buf[k] == c:
                            dup = True
                            break
                    if dup:
                        continue
                    if n_done < MAXDONE:
                        self.done_buf[n_done] = c
                        n_done += 1
                    lam = ks_ctz(<u64>y)
                    if lam > self.top:
                        lam = self.top
                    j = y >> lam
                    if self.caps[lam] < 0:
                        e = self.arr[lam] + (j - 1) * 4
                    elif (h >> lam) - j >= self.bs[lam]:
                        continue
                    else:
                        e = self.arr[lam] + (j % self.caps[lam]) * 4
                    self.checks += 1
                    lhs = ks_addmod(ks_submod(self.fwd, e[0]),
                                    ks_submod(ks_mulmod(e[1], self.pw),
                                              ks_mulmod(self.rev, e[2])))
                    if lhs == 0:
                        r = (h - y) >> 1
                        if r > best:
                            best = r
                        if r >= thr:
                            self._buffer_touch(seg, c, r)
                        # two fresh buffer entries per family are plenty
                        hits += 1
                        if hits == 2:
                            break
        # drop caches whose windows have slid past the segment for good
        wi = 0
        for ci in range(seg.n_caches):
            if seg.caches[ci].lam >= 0:
                if wi != ci:
                    seg.caches[wi] = seg.caches[ci]
                wi += 1
        seg.n_caches = wi
        if seg.n_caches:
            min_next = seg.caches[0].next_h
            for ci in range(1, seg.n_caches):
                if seg.caches[ci].next_h < min_next:
                    min_next = seg.caches[ci].next_h
            seg.next_h = min_next
        else:
            seg.inert = True
        return best

    cdef void _buffer_touch(self, Seg *seg, i64 centre, i64 radius) nogil:
        cdef int i, k
        cdef Alive tmp
        for i in range(seg.n_buf):
            if seg.buf[i].c == centre:
                tmp = seg.buf[i]
                if radius > tmp.r:
                    tmp.r = radius
                for k in range(i, 0, -1):
                    seg.buf[k] = seg.buf[k - 1]
                seg.buf[0] = tmp
                return
        if seg.n_buf < BUFSZ:
            seg.n_buf += 1
        for k in range(seg.n_buf - 1, 0, -1):
            seg.buf[k] = seg.buf[k - 1]
        seg.buf[0].c = centre
        seg.buf[0].r = radius

    # -- accounting ----------------------------------------------------------

    cdef i64 _entries_current(self) nogil:
        cdef i64 total = 0, j
        cdef int lam
        for lam in range(self.n_levels):
            j = self.h >> lam
            if self.caps[lam] < 0:
                total += j
            else:
                total += j if j < self.caps[lam] else self.caps[lam]
        return total

    cdef i64 _aux_words(self) nogil:
        cdef i64 total = 2 * self.n_groups + 4
        cdef int e, i
        cdef Seg *seg
        for e in range(self.n_exps):
            for i in range(self.ring_n[e]):
                seg = self.ring[e][i]
                if seg.kind == 0:
                    total += 5 + 2 * seg.n_alive
                else:
                    total += 7 + 2 * seg.n_buf + 13 * seg.n_caches
        return total

    cdef void _note_aux_peak(self) nogil:
        cdef i64 v = self._entries_current()
        if v > self._peak_entries:
            self._peak_entries = v
        v = self._aux_words()
        if v > self._aux_peak:
            self._aux_peak = v

    def note_peak(self):
        self._note_aux_peak()

    def words_current(self):
        return 6 * self._entries_current() + 8 + self._aux_words()

    def peak_words(self):
        self._note_aux_peak()
        return 6 * self._peak_entries + 8 + self._aux_peak

    def entries_current(self):
        return self._entries_current()

    def peak_entries(self):
        self._note_aux_peak()
        return self._peak_entries
