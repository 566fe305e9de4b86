"""Per-segment bookkeeping of palindrome checks still worth running.

Every position c of the text is the centre of a candidate even palindrome
T[c-r..c+r-1].  A check of centre c at time h either succeeds (verifying
radius h-c+1) or fails, and a failed centre can never succeed again at a
larger radius, so it is dead.  Segments of the partition track their live
centres in one of two shapes:

* sparse -- an explicit list of at most four (centre, best radius) pairs;
  anything not listed is known dead (or known unreachable forever).
* dense  -- the segment is periodic: there is an anchor c and an even
  period p <= half the segment length such that T[c..c+p-1] is an even
  palindrome and every live centre is c + alpha*p/2 for some alpha >= 0.
  Alongside the implicit family the description keeps a small buffer of
  the five most recently verified (centre, radius) pairs and per-level
  residue caches used by the compressed engine.

A dense description is born when a merge brings together five or more
live centres whose verified radii reach the merged segment length: their
pairwise distances then force the common period p = 2*gcd(gaps) (densify).
When a dense segment is merged away, the buffer is the whole truth: if at
most four buffered centres have radius >= the new segment length, exactly
those survive (survivors); otherwise the family itself carries over and is
reconciled with the period computed from the buffered centres.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "SparseDesc",
    "DenseDesc",
    "LevelCache",
    "SegmentBody",
    "densify",
    "reconcile",
    "survivors",
    "buffer_touch",
]

BUFFER_SIZE = 5


@dataclass(slots=True)
class SparseDesc:
    # [centre, best verified radius] pairs, increasing by centre
    alive: list[list[int]]


@dataclass(slots=True)
class LevelCache:
    lam: int
    b: int | None      # window size of the level (None = unbounded)
    gpow: int          # 2^g with g = min(v2(p), lam)
    mod: int           # 2^(lam - g), the number of residue classes
    inv: int           # (p / gpow)^-1 mod `mod`  (1 when mod == 1)
    step: int          # lcm(2^lam, p) = p * mod, the family period |w|
    # verified periodic zone: T[al+1 .. ar] has period `step`
    al: int = 0
    ar: int = 0
    left_open: bool = False    # zone may extend further left than verified
    right_closed: bool = False # a mismatch right of ar has been verified
    has_zone: bool = False
    next_h: int = 0            # next time the residue equation is solvable


@dataclass(slots=True)
class DenseDesc:
    anchor: int
    p: int
    buffer: list[list[int]] = field(default_factory=list)  # [centre, radius]
    caches: dict[int, LevelCache] = field(default_factory=dict)


@dataclass(slots=True)
class SegmentBody:
    start: int
    end: int
    exp: int
    desc: SparseDesc | DenseDesc
    inert: bool = False  # nothing left to check, ever
    next_h: int = 0      # dense only: earliest time any level is eligible

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def densify(centres: list[int]) -> tuple[int, int]:
    """(anchor, period) implied by >= 5 centres with segment-length radii.

    The verified palindromes around any two neighbouring centres overlap in
    more than twice their distance, which forces twice every gap to be a
    period; the common period is therefore p = 2*gcd of the gaps, and every
    centre sits on the half-period grid anchored at the smallest one.
    """
    if len(centres) < 5:
        raise ValueError("densify needs at least five centres")
    g = 0
    for a, b in zip(centres, centres[1:]):
        if b <= a:
            raise ValueError("centres must be strictly increasing")
        g = math.gcd(g, b - a)
    return centres[0], 2 * g


def reconcile(p_new: int, p_old: int) -> int:
    """Period covering both a freshly computed family and an inherited one.

    When a parent family is carried over, its live centres are an unknown
    subset of the p_old/2 grid, so the combined grid must refine it: the
    gcd is the coarsest period whose half-grid contains both families.
    """
    return math.gcd(p_new, p_old)


def survivors(desc: DenseDesc, threshold: int) -> list[list[int]] | None:
    """Buffered centres with radius >= threshold if at most four, else None.

    None means at least five qualify, so live centres beyond the buffer may
    exist and the family description has to be carried over instead.
    """
    qual = [e for e in desc.buffer if e[1] >= threshold]
    if len(qual) <= 4:
        qual.sort(key=lambda e: e[0])
        return qual
    return None


def buffer_touch(buffer: list[list[int]], centre: int, radius: int) -> None:
    """Record a verified (centre, radius), most recently used first."""
    for i, entry in enumerate(buffer):
        if entry[0] == centre:
            entry[1] = max(entry[1], radius)
            buffer.insert(0, buffer.pop(i))
            return
    buffer.insert(0, [centre, radius])
    del buffer[BUFFER_SIZE:]
