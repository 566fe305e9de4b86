"""Compressed streaming engine: per-segment bookkeeping instead of scanning.

The reference engine spends time linear in the number of stored landmarks
per symbol.  This engine keeps the same landmark store but drives the
checks from a power-of-two partition of the consumed text: every segment
remembers which of its centres can still produce a palindrome (a sparse
list of at most four, or a periodic family description), and each step
touches every segment only through that bookkeeping.

Per step and per dense segment the work is bounded: for each associated
level the residue equation picks at most two arithmetic families of
centres whose mirrors can currently be landmarks; if a family has more
than a handful of members inside the segment, a cached periodic zone of
the text pins down, up to a constant-width window, which members can
possibly succeed, and only those are checked.  Every check is verified
against a real landmark fingerprint before it can update the answer, so
all bookkeeping errors can only cost extra work or missed candidates,
never a wrong radius.
"""

from __future__ import annotations

from .fingerprint import MERSENNE61, params_new
from .landmarks import LandmarkStore
from .partition import Partition
from .schemes import MIN_WINDOW, SchemeConfig, stream_config
from .segments import (
    DenseDesc,
    LevelCache,
    SegmentBody,
    SparseDesc,
    buffer_touch,
    densify,
    reconcile,
    survivors,
)

try:  # optional compiled twin of this engine (see _kernel.pyx)
    from . import _kernel as _native_mod
except ImportError:  # pragma: no cover - build without the extension
    _native_mod = None

__all__ = [
    "CompressedEngine",
    "NativeCompressedEngine",
    "associated_levels",
    "compressed_engine",
    "native_available",
]

# a family with at most this many members in the segment is checked whole
SMALL_FAMILY = 6


def associated_levels(exp: int, cfg: SchemeConfig) -> tuple[int, ...]:
    """Levels whose landmark window matches the check cadence of segments
    of length 2**exp: window sizes within [6*2^exp - 3, 40*2^exp - 18],
    plus the top level when its window reaches at least that far (or is
    unbounded)."""
    b0 = cfg.levels[0].b or MIN_WINDOW
    lo = 6 * (1 << exp) - 3
    hi = 40 * (1 << exp) - 18
    top = cfg.top
    out = [lam for lam in range(top) if lo <= b0 << lam <= hi]
    top_b = cfg.levels[-1].b
    if top_b is None or top == 0 or (b0 << (top - 1)) <= hi:
        out.append(top)
    return tuple(out)


def _stop_centre(l: int, r: int) -> int:
    # centre selection pivot for a family with l verified periods to the
    # left and r to the right of its first member
    return max((l + r + 1) // 2 - l + 1, 0)


class CompressedEngine:
    def __init__(self, cfg: SchemeConfig, seed: int = 0, full_zone_check: bool = False):
        if cfg.kind == "sparse":
            raise ValueError("the sparse schedule is reference-engine only")
        self.cfg = stream_config(cfg)  # windows sized for the doubled stream
        self.params = params_new(max(2 * cfg.n, 4), seed)
        self.store = LandmarkStore(self.params, self.cfg.levels)
        self.partition = Partition()
        self.best = 0
        self.maxreach = self.cfg.max_window_chars()
        self.full_zone_check = full_zone_check  # re-derive zones every visit
        self.checks = 0
        self.densifies = 0
        self.zone_stalls = 0
        self._assoc: dict[int, tuple[int, ...]] = {}
        self._aux_peak = 0

    @property
    def h(self) -> int:
        return self.store.h

    # -- the step -----------------------------------------------------------

    def push(self, a: int) -> int:
        store = self.store
        store.advance(a)
        h = store.h
        self.partition.advance(
            SegmentBody(h, h, 0, SparseDesc([[h, 0]])), self._merge
        )
        best = self.best
        # mirror position 0 is a permanent landmark: the centre (h+2)/2 is
        # checked here once and for all, so segment bookkeeping may prune
        # centres as soon as their mirrors leave every level window
        if not (h & 1) and h > 2 * best and (store.fwd - store.rev) % MERSENNE61 == 0:
            best = h >> 1
        for dq in self.partition.by_exp:
            for seg in dq:
                if seg.inert or h < seg.next_h:
                    continue
                d = seg.desc
                if type(d) is SparseDesc:
                    if d.alive:
                        best = self._step_sparse(seg, d, h, best)
                    else:
                        seg.inert = True
                else:
                    if d.caches:
                        best = self._step_dense(seg, d, h, best)
                    else:
                        seg.inert = True
        self.best = best
        if not (h & 63):
            self._note_aux_peak()
        return best

    # -- sparse segments ------------------------------------------------------

    def _runnable(self, c: int, h: int) -> bool:
        y = 2 * c - h - 2
        return y >= 0 and (self.maxreach is None or h - y <= self.maxreach)

    def _step_sparse(self, seg: SegmentBody, d: SparseDesc, h: int, best: int) -> int:
        store = self.store
        p = MERSENNE61
        F = store.fwd
        R = store.rev
        PW = store.pw
        arrays = store.arrays
        caps = store.caps
        bs = store.bs
        top = store.top
        maxreach = self.maxreach
        alive = d.alive
        thr = 1 << (seg.exp + 1)
        i = 0
        while i < len(alive):
            c = alive[i][0]
            y = 2 * c - h - 2
            if y <= 0 or (maxreach is not None and h - y > maxreach):
                # mirror 0 is handled globally; past it the centre is dead
                alive.pop(i)
                continue
            r = (h - y) >> 1
            if r <= best and r < thr:
                # confirming this radius could neither improve the answer nor
                # matter at the next merge; a failure only means no growth,
                # the radius already recorded stays a true palindrome radius
                i += 1
                continue
            lam = (y & -y).bit_length() - 1
            if lam > top:
                lam = top
            j = y >> lam
            cap = caps[lam]
            if cap is None:
                e = arrays[lam][j - 1]
            elif (h >> lam) - j >= bs[lam]:
                i += 1
                continue
            else:
                e = arrays[lam][j % cap]
            self.checks += 1
            if (F - e[0] - R * e[2] + e[1] * PW) % p == 0:
                alive[i][1] = r
                if r > best:
                    best = r
                i += 1
            else:
                alive.pop(i)  # failed once = dead forever
        return best

    # -- dense segments ---------------------------------------------------------

    def _step_dense(self, seg: SegmentBody, d: DenseDesc, h: int, best: int) -> int:
        store = self.store
        p = MERSENNE61
        F = store.fwd
        R = store.rev
        PW = store.pw
        arrays = store.arrays
        caps = store.caps
        bs = store.bs
        top = store.top
        end = seg.end
        anchor = d.anchor
        half_p = d.p >> 1
        buf = d.buffer
        # radii below the next merge threshold can never be survivors, and
        # radii not above the current answer cannot improve it: mirrors whose
        # checks could only confirm such radii are skipped outright
        thr = 1 << (seg.exp + 1)
        done: set[int] = set()
        dead: list[int] = []
        y_max = 2 * end - h - 2
        y_keep = h - (thr << 1)
        alt = h - 2 * best - 1
        if alt > y_keep:
            y_keep = alt
        for cache in d.caches.values():
            if h < cache.next_h:
                continue
            cache.next_h = h + cache.gpow
            b = cache.b
            if b is None:
                y_lo = 0
                if y_max < 0:
                    dead.append(cache.lam)
                    continue
            else:
                y_lo = ((h >> cache.lam) - b + 1) << cache.lam
                if y_lo < 0:
                    y_lo = 0
                if y_max < y_lo:
                    # the window slides right, mirrors slide left: over forever
                    dead.append(cache.lam)
                    continue
            y_hi = y_max if y_max < y_keep else y_keep
            if y_hi < y_lo:
                continue
            c_hi = (y_hi + h + 2) >> 1
            if cache.mod > 1:
                alpha0 = (((h + 2 - 2 * anchor) // cache.gpow) * cache.inv) % cache.mod
            else:
                alpha0 = 0
            step = cache.step
            base1 = anchor + alpha0 * half_p
            # the first member whose mirror can be inside the window
            c_lo = (y_lo + h + 3) >> 1
            for base in (base1, base1 + (step >> 1)):
                if c_lo > base:
                    base += -(-(c_lo - base) // step) * step
                if base > c_hi:
                    continue
                m = (c_hi - base) // step + 1
                if m <= SMALL_FAMILY:
                    lo_t, hi_t = 0, m - 1
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
                    fs = (
                        _stop_centre(l_est, r_est),
                        _stop_centre(l_est + 1, r_est),
                        _stop_centre(l_est, r_est + 1),
                        _stop_centre(l_est + 1, r_est + 1),
                    )
                    # one extra slot on each side absorbs the off-by-one slack
                    # of the estimates; the whole run of possible winners is
                    # covered
                    lo_t = max(min(fs) - 2, 0)
                    hi_t = min(max(fs) + 3, m - 1)
                hits = 0
                for t in range(lo_t, hi_t + 1):
                    c = base + t * step
                    y = 2 * c - h - 2
                    if y <= 0 or c in done:
                        continue
                    done.add(c)
                    lam = (y & -y).bit_length() - 1
                    if lam > top:
                        lam = top
                    j = y >> lam
                    cap = caps[lam]
                    if cap is None:
                        e = arrays[lam][j - 1]
                    elif (h >> lam) - j >= bs[lam]:
                        continue
                    else:
                        e = arrays[lam][j % cap]
                    self.checks += 1
                    if (F - e[0] - R * e[2] + e[1] * PW) % p == 0:
                        r = (h - y) >> 1
                        if r > best:
                            best = r
                        if r >= thr:
                            buffer_touch(buf, c, r)
                        # subsequent members only shrink the radius; two fresh
                        # buffer entries per family and step are plenty
                        hits += 1
                        if hits == 2:
                            break
        for lam in dead:
            del d.caches[lam]
        if d.caches:
            seg.next_h = min(c.next_h for c in d.caches.values())
        else:
            seg.inert = True
        return best

    def _level_b(self, lam: int) -> int | None:
        for spec in self.cfg.levels:
            if spec.lam == lam:
                return spec.b
        return None

    # -- periodic zones ---------------------------------------------------------

    def _build_zone(self, seg: SegmentBody, cache: LevelCache, h0: int) -> None:
        """Measure how far the family period extends around the segment."""
        store = self.store
        lam = cache.lam
        step = cache.step
        mask = (1 << lam) - 1
        s0 = (seg.start - 1 + mask) & ~mask  # aligned, >= start - 1
        cache.has_zone = True
        amax = (h0 - s0) // step
        if amax < 1:
            cache.al = cache.ar = s0
            cache.left_open = True
            cache.right_closed = False
            return

        def right_ok(a: int) -> bool:
            return store.is_period_over(s0, s0 + a * step, step, True) is True

        a = _bsearch_max(1, amax, right_ok)
        cache.ar = s0 + a * step
        cache.right_closed = a < amax

        b = cache.b
        if b is None:
            lo_pos = 0
        else:
            cap = max(b * 4, b)  # ghost retention of the store
            jlo = (h0 >> lam) - cap + 1
            lo_pos = (jlo << lam) if jlo > 0 else 0
        acap = (s0 - lo_pos) // step
        if acap <= 0:
            cache.al = s0
            cache.left_open = True
            return

        def left_ok(a: int) -> bool:
            return store.is_period_over(s0 - a * step, s0 + step, step, True) is True

        a2 = _bsearch_max(0, acap, left_ok)
        cache.al = s0 - a2 * step
        cache.left_open = a2 == acap

    def _extend_zone(self, cache: LevelCache, h: int) -> None:
        if self.full_zone_check:
            # debugging aid: distrust the incremental border and re-verify
            store = self.store
            step = cache.step
            while cache.ar + step <= h:
                chk = store.is_period_over(cache.ar - step, cache.ar + step, step, True)
                if chk is None or not chk:
                    break
                cache.ar += step
            return
        if cache.right_closed:
            return
        store = self.store
        step = cache.step
        ar = cache.ar
        while ar + step <= h:
            chk = store.is_period_over(ar - step, ar + step, step, True)
            if chk is None:
                self.zone_stalls += 1
                break
            if chk:
                ar += step
            else:
                cache.right_closed = True
                break
        cache.ar = ar

    # -- merging ------------------------------------------------------------------

    def _merge(self, left: SegmentBody, right: SegmentBody, new_exp: int) -> SegmentBody:
        h = self.store.h
        thr = 1 << new_exp  # required verified radius: the new segment length
        entries: list[list[int]] = []
        carried: list[DenseDesc] = []
        extra_buf: list[list[int]] = []
        for side in (left, right):
            d = side.desc
            if type(d) is SparseDesc:
                entries.extend(e for e in d.alive if self._runnable(e[0], h))
            else:
                sv = survivors(d, thr)
                if sv is None:
                    qual = sorted(e for e in d.buffer if e[1] >= thr)
                    entries.extend(qual)
                    carried.append(d)
                    extra_buf.extend(d.buffer)
                else:
                    entries.extend(sv)

        if not carried and len(entries) <= 4:
            return SegmentBody(left.start, right.end, new_exp, SparseDesc(entries))

        anchor, p = densify([e[0] for e in entries])
        for d in carried:
            p = reconcile(p, d.p)
        half = p >> 1
        anchor -= ((anchor - left.start) // half) * half

        pool: dict[int, int] = {}
        for c, r in entries + extra_buf:
            if r > pool.get(c, -1):
                pool[c] = r
        buf = sorted(([c, r] for c, r in pool.items()), key=lambda e: -e[1])[:5]

        desc = DenseDesc(anchor=anchor, p=p, buffer=buf)
        seg = SegmentBody(left.start, right.end, new_exp, desc)
        self._build_caches(seg, desc, h)
        self.densifies += 1
        return seg

    def _build_caches(self, seg: SegmentBody, d: DenseDesc, h0: int) -> None:
        p = d.p
        tz = (p & -p).bit_length() - 1
        for lam in self._assoc_levels(seg.exp):
            g = tz if tz < lam else lam
            gpow = 1 << g
            mod = 1 << (lam - g)
            step = p * mod  # lcm(2^lam, p)
            inv = pow(p >> g, -1, mod) if mod > 1 else 1
            delta = (2 * d.anchor - 2 - h0) % gpow
            cache = LevelCache(
                lam=lam, b=self._level_b(lam), gpow=gpow, mod=mod, inv=inv,
                step=step, next_h=h0 + delta,
            )
            if seg.length // step + 1 > SMALL_FAMILY:
                self._build_zone(seg, cache, h0)
            d.caches[lam] = cache

    def _assoc_levels(self, exp: int) -> tuple[int, ...]:
        got = self._assoc.get(exp)
        if got is None:
            got = self._assoc[exp] = associated_levels(exp, self.cfg)
        return got

    # -- accounting --------------------------------------------------------------

    def aux_words(self) -> int:
        total = 2 * len(self.partition.groups) + 4
        for dq in self.partition.by_exp:
            for seg in dq:
                d = seg.desc
                if type(d) is SparseDesc:
                    total += 5 + 2 * len(d.alive)
                else:
                    total += 7 + 2 * len(d.buffer) + 13 * len(d.caches)
        return total

    def words_current(self) -> int:
        return self.store.words_current() + self.aux_words()

    def _note_aux_peak(self) -> None:
        self.store.note_peak()
        w = self.aux_words()
        if w > self._aux_peak:
            self._aux_peak = w

    def note_peak(self) -> None:
        self._note_aux_peak()

    def peak_words(self) -> int:
        self._note_aux_peak()
        return self.store.peak_words() + self._aux_peak


def _bsearch_max(lo: int, hi: int, pred) -> int:
    """Largest a in [lo, hi] with pred(a), assuming pred(lo) holds and pred
    is monotone downward."""
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if pred(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


def native_available() -> bool:
    """Whether the compiled kernel was built and can be used."""
    return _native_mod is not None


class NativeCompressedEngine:
    """Compiled variant of CompressedEngine with the same answer stream.

    Thin wrapper handing every push to the C kernel; construction mirrors
    CompressedEngine so the two are interchangeable in tests and tools.
    """

    def __init__(self, cfg: SchemeConfig, seed: int = 0):
        if cfg.kind == "sparse":
            raise ValueError("the sparse schedule is reference-engine only")
        if _native_mod is None:
            raise RuntimeError("the compiled kernel is not available")
        self.cfg = stream_config(cfg)
        self.params = params_new(max(2 * cfg.n, 4), seed)
        self.maxreach = self.cfg.max_window_chars()
        assoc = [
            associated_levels(exp, self.cfg)
            for exp in range(max(2 * cfg.n, 4).bit_length() + 2)
        ]
        self._k = _native_mod.NativeEngine(
            [(spec.lam, spec.b) for spec in self.cfg.levels],
            self.params.x,
            self.params.x_inv,
            self.maxreach,
            assoc,
            SMALL_FAMILY,
        )
        self.push = self._k.push

    @property
    def h(self) -> int:
        return self._k.h

    @property
    def best(self) -> int:
        return self._k.best

    @property
    def checks(self) -> int:
        return self._k.checks

    @property
    def densifies(self) -> int:
        return self._k.densifies

    @property
    def zone_stalls(self) -> int:
        return self._k.zone_stalls

    def words_current(self) -> int:
        return self._k.words_current()

    def note_peak(self) -> None:
        self._k.note_peak()

    def peak_words(self) -> int:
        return self._k.peak_words()


def compressed_engine(cfg: SchemeConfig, seed: int = 0, native: bool | None = None):
    """CompressedEngine or its compiled twin.

    native=None picks the kernel when it is built, True requires it, and
    False forces the pure-Python engine.
    """
    if native is None:
        native = _native_mod is not None and cfg.kind != "sparse"
    if native:
        return NativeCompressedEngine(cfg, seed)
    return CompressedEngine(cfg, seed)
