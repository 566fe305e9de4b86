"""Landmark store: prefix fingerprints retained on a geometric schedule.

While a text T[1..h] is consumed one symbol at a time, the store keeps the
fingerprint of every prefix T[1..i] for a sliding set of positions i called
landmarks.  Landmarks are organised in levels: level lam keeps the b most
recently seen positions divisible by 2^lam (so higher levels are coarser
but reach further back).  A level may be unbounded, in which case every
multiple of 2^lam seen so far is retained.  Position 0 (the empty prefix)
is a permanent landmark on every level.

For bounded levels a number of additional older entries -- here four times
the advertised window -- are kept as "ghosts".  Ghost entries are never
used to run a palindrome check; they only serve fingerprint arithmetic on
old ranges (period tests during segment bookkeeping).

With the fingerprints of T[1..t1] and T[1..t2] the store answers the
fingerprint of any range T[t1+1..t2] in O(1), and in particular whether a
range equals its shift by q positions, i.e. whether q is a period.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fingerprint import Fingerprint, HashParams

__all__ = ["LevelSpec", "LandmarkStore"]

GHOST_MULT = 4


@dataclass(frozen=True, slots=True)
class LevelSpec:
    lam: int          # positions divisible by 2**lam
    b: int | None     # regular window size; None = keep everything
    ghost_mult: int = GHOST_MULT


class LandmarkStore:
    """Prefix fingerprints of a growing text, retained per level."""

    def __init__(self, params: HashParams, levels: list[LevelSpec]):
        self.params = params
        self.levels = sorted(levels, key=lambda s: s.lam)
        self.lams = [s.lam for s in self.levels]
        self.bs = [s.b for s in self.levels]
        self.caps = [
            None if s.b is None else max(s.b * s.ghost_mult, s.b)
            for s in self.levels
        ]
        # uniform := consecutive levels 0..L, which allows O(1) lookups by
        # classifying a position through its number of trailing zero bits
        self.uniform = self.lams == list(range(len(self.levels))) and self.levels
        self.top = self.lams[-1] if self.levels else 0
        self.arrays: list[list] = [
            [] if cap is None else [None] * cap for cap in self.caps
        ]
        self.h = 0
        # fingerprint of T[1..h], unpacked for the hot paths
        self.fwd = 0
        self.rev = 0
        self.pw = 1
        self.ipw = 1
        self._peak_entries = 0

    # -- growing the text -------------------------------------------------

    def advance(self, a: int) -> None:
        """Consume one symbol (an integer in [1, p))."""
        p = self.params.p
        x = self.params.x
        self.fwd = (self.fwd + a * self.pw) % p
        self.rev = (self.rev * x + a) % p
        self.pw = (self.pw * x) % p
        self.ipw = (self.ipw * self.params.x_inv) % p
        h = self.h = self.h + 1
        entry = (self.fwd, self.rev, self.pw, self.ipw)
        if self.uniform:
            tz = (h & -h).bit_length() - 1
            hi = min(tz, self.top)
            for lam in range(hi + 1):
                cap = self.caps[lam]
                if cap is None:
                    self.arrays[lam].append(entry)
                else:
                    self.arrays[lam][(h >> lam) % cap] = entry
        else:
            for idx, lam in enumerate(self.lams):
                if h & ((1 << lam) - 1):
                    continue
                cap = self.caps[idx]
                if cap is None:
                    self.arrays[idx].append(entry)
                else:
                    self.arrays[idx][(h >> lam) % cap] = entry

    # -- membership and retrieval -----------------------------------------

    def classify_level(self, y: int) -> int:
        """Level on which position y would be looked up (uniform stores)."""
        if y == 0:
            return self.top
        return min((y & -y).bit_length() - 1, self.top)

    def _raw_lookup(self, y: int, ghost: bool):
        """(fwd, rev, pw, ipw) of T[1..y], or None if y is not retained."""
        if y == 0:
            return (0, 0, 1, 1)
        if y == self.h:
            return (self.fwd, self.rev, self.pw, self.ipw)
        if y < 0 or y > self.h:
            return None
        if self.uniform:
            lam = min((y & -y).bit_length() - 1, self.top)
            j = y >> lam
            cap = self.caps[lam]
            if cap is None:
                return self.arrays[lam][j - 1]
            limit = cap if ghost else self.bs[lam]
            if (self.h >> lam) - j >= limit:
                return None
            return self.arrays[lam][j % cap]
        for idx, lam in enumerate(self.lams):
            if y & ((1 << lam) - 1):
                continue
            j = y >> lam
            cap = self.caps[idx]
            if cap is None:
                return self.arrays[idx][j - 1]
            limit = cap if ghost else self.bs[idx]
            if (self.h >> lam) - j < limit:
                return self.arrays[idx][j % cap]
        return None

    def lookup(self, y: int, ghost: bool = False) -> Fingerprint | None:
        raw = self._raw_lookup(y, ghost)
        if raw is None:
            return None
        return Fingerprint(y, *raw)

    def range_fp(self, t1: int, t2: int, ghost: bool = False) -> Fingerprint | None:
        """Fingerprint of T[t1+1..t2], if both endpoints are landmarks."""
        if not (0 <= t1 <= t2 <= self.h):
            return None
        a = self._raw_lookup(t1, ghost)
        if a is None:
            return None
        b = self._raw_lookup(t2, ghost)
        if b is None:
            return None
        p = self.params.p
        fwd1, rev1, pw1, ipw1 = a
        fwd2, rev2, pw2, ipw2 = b
        pw_v = (pw2 * ipw1) % p
        return Fingerprint(
            t2 - t1,
            ((fwd2 - fwd1) * ipw1) % p,
            (rev2 - rev1 * pw_v) % p,
            pw_v,
            (ipw2 * pw1) % p,
        )

    def is_period_over(self, a: int, b: int, q: int, ghost: bool = False):
        """Whether q is a period of T[a+1..b]; None if landmarks are missing.

        Tests fingerprint equality of T[a+q+1..b] and T[a+1..b-q], which
        needs all four of a, a+q, b-q, b retained.
        """
        if q <= 0 or a + q > b:
            return None
        left = self.range_fp(a + q, b, ghost)
        if left is None:
            return None
        right = self.range_fp(a, b - q, ghost)
        if right is None:
            return None
        return left.fwd == right.fwd

    # -- enumeration (reference engine) ------------------------------------

    def iter_positions(self, parity: int | None = None):
        """All current regular landmark positions, without duplicates.

        With parity given, only positions y with y % 2 == parity.  Position 0
        is always included (subject to the parity filter).
        """
        h = self.h
        seen = None if self.uniform else set()
        for idx in range(len(self.levels) - 1, -1, -1):
            lam = self.lams[idx]
            b = self.bs[idx]
            jh = h >> lam
            lo = 1 if b is None else max(1, jh - b + 1)
            top_level = idx == len(self.levels) - 1
            for j in range(jh, lo - 1, -1):
                if self.uniform:
                    # avoid duplicates: below the top level only odd j
                    # belong strictly to this level
                    if not top_level and j % 2 == 0:
                        continue
                else:
                    if j << lam in seen:
                        continue
                    seen.add(j << lam)
                y = j << lam
                if parity is None or (y & 1) == parity:
                    yield y
        if parity is None or parity == 0:
            yield 0

    # -- accounting ---------------------------------------------------------

    def entries_current(self) -> int:
        total = 0
        for idx, lam in enumerate(self.lams):
            j = self.h >> self.lams[idx]
            cap = self.caps[idx]
            total += j if cap is None else min(j, cap)
        return total

    def words_current(self) -> int:
        # five stored words per entry (position implied by the slot, but we
        # charge for it anyway) plus the running prefix fingerprint
        return 6 * self.entries_current() + 8

    def note_peak(self) -> None:
        e = self.entries_current()
        if e > self._peak_entries:
            self._peak_entries = e

    def peak_words(self) -> int:
        self.note_peak()
        return 6 * self._peak_entries + 8
