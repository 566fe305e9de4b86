"""Power-of-two partition of the seen text with slow, predictable merges.

The consumed positions 1..h are split into contiguous segments whose
lengths are powers of two and non-increasing from left to right.  Writing
c_l for the number of segments of length 2^l, the partition maintains

    3 <= c_l <= 5         for l < M   (M = largest exponent in use)
    1 <= c_M <= 5
    c_l = 5  implies  c_j = 3 for some j < l with c_(j+1..l-1) = 4

Each consumed position appends a fresh unit segment and performs at most
one merge of two adjacent equal-length segments:

    * if c_0 reaches 5, the two leftmost unit segments merge;
    * else if c_0 = 4 and there is i with c_1 .. c_(i-1) = 4 and c_i = 5,
      the two leftmost segments of length 2^i merge.

The bookkeeping consequence used heavily elsewhere: a segment of length
2^l is created while at most 2^(l+2) - 5 positions lie to its right, and
destroyed (merged away) only once at least 3*(2^(l+1) - 1) do.

Counts are stored as a run-length list grouped by exponent, so locating
the merge point and editing the counts touch O(1) runs per step; the
per-exponent segment queues are plain deques.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

__all__ = ["MergeEvent", "Partition"]


@dataclass(frozen=True, slots=True)
class MergeEvent:
    exp: int          # exponent of the two segments that merged
    new_exp: int      # exp + 1
    h: int            # time of the merge


class Partition:
    def __init__(self):
        self.h = 0
        # run-length grouped counts, ascending exponents: [[value, runlen], ...]
        self.groups: list[list[int]] = []
        self.by_exp: list[deque] = []

    # -- derived views ------------------------------------------------------

    def counts(self) -> list[int]:
        out: list[int] = []
        for value, run in self.groups:
            out.extend([value] * run)
        return out

    def segments(self):
        """All payloads, leftmost (largest) first."""
        for exp in range(len(self.by_exp) - 1, -1, -1):
            yield from self.by_exp[exp]

    def segments_small_first(self):
        for dq in self.by_exp:
            yield from dq

    @property
    def top_exp(self) -> int:
        return sum(run for _, run in self.groups) - 1

    # -- run-length count editing -------------------------------------------

    def _add(self, k: int, delta: int) -> None:
        """counts[k] += delta, appending counts[k] = delta for a new top k."""
        g = self.groups
        pos = 0
        ri = 0
        while ri < len(g) and pos + g[ri][1] <= k:
            pos += g[ri][1]
            ri += 1
        if ri == len(g):           # new top exponent
            assert k == pos and delta > 0
            g.append([delta, 1])
        else:
            value, run = g[ri]
            off = k - pos
            pieces = []
            if off:
                pieces.append([value, off])
            pieces.append([value + delta, 1])
            if run - off - 1:
                pieces.append([value, run - off - 1])
            g[ri:ri + 1] = pieces
            ri += 1 if off else 0
        # merge the edited singleton with equal-valued neighbours
        if ri + 1 < len(g) and g[ri][0] == g[ri + 1][0]:
            g[ri][1] += g[ri + 1][1]
            g.pop(ri + 1)
        if ri > 0 and g[ri - 1][0] == g[ri][0]:
            g[ri - 1][1] += g[ri][1]
            g.pop(ri)

    # -- the step -----------------------------------------------------------

    def advance(self, unit_payload, merge_fn) -> MergeEvent | None:
        """Consume one position.

        unit_payload is stored as a fresh length-1 segment.  When a merge
        fires, merge_fn(left_payload, right_payload, new_exp) must return
        the payload of the combined segment.  Returns the merge performed,
        if any.
        """
        self.h += 1
        if not self.by_exp:
            self.by_exp.append(deque())
        self.by_exp[0].append(unit_payload)
        self._add(0, 1)
        g = self.groups

        # select the merge exponent: either c_0 = 5, or c_0 = 4 heading a
        # run of fours followed directly by a five
        if g[0][0] == 5:
            i = 0
        elif g[0][0] == 4 and len(g) > 1 and g[1][0] == 5:
            i = g[0][1]
        else:
            return None
        self._add(i, -2)
        self._add(i + 1, 1)
        dq = self.by_exp[i]
        left = dq.popleft()
        right = dq.popleft()
        merged = merge_fn(left, right, i + 1)
        if len(self.by_exp) == i + 1:
            self.by_exp.append(deque())
        self.by_exp[i + 1].append(merged)
        return MergeEvent(exp=i, new_exp=i + 1, h=self.h)

    # -- validation (used by the fuzz tests) ---------------------------------

    def check_invariants(self) -> None:
        counts = self.counts()
        if not counts:
            assert self.h == 0
            return
        top = len(counts) - 1
        total = 0
        for l, c in enumerate(counts):
            assert len(self.by_exp[l]) == c, (l, counts, [len(d) for d in self.by_exp])
            total += c << l
            if l < top:
                assert 3 <= c <= 5, counts
            else:
                assert 1 <= c <= 5, counts
            if c == 5:
                j = l - 1
                while j >= 0 and counts[j] == 4:
                    j -= 1
                assert j >= 0 and counts[j] == 3, counts
        assert total == self.h, (total, self.h)
        for value, run in self.groups:
            assert run >= 1
        for a, b in zip(self.groups, self.groups[1:]):
            assert a[0] != b[0]
