"""Landmark retention schedules and the error guarantees they buy.

A schedule assigns each level lam a window size b_lam.  The engines check a
palindrome centred at c only at moments h when the mirror position
2c - h - 2 is currently a landmark, so the schedule fully determines both
the memory footprint and the approximation error:

* additive E:        twelve entries on levels 0..L-1 and an unbounded level
                     L = floor(log2 E); every palindrome is reported with
                     radius error < 2^L <= E.
* multiplicative eps: D = max(12, ceil(5 + 4/eps)) entries on every level
                     0..floor(log2(n/D)); the reported radius is within a
                     factor (D-1)/(D-5) <= 1 + eps.
* sparse (eps >= 1): a single landmark per level, at the last position
                     divisible by 2^(k*i) for k = floor(log2(1 + eps));
                     O(log n / log(1+eps)) words in total.  Only the
                     reference engine uses this schedule and its factor
                     (1 + eps) is validated empirically.

Window sizes below twelve would break the delay guarantee (see
partition/segments), hence the floor of twelve everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .landmarks import LevelSpec

__all__ = [
    "SchemeConfig",
    "additive_config",
    "multiplicative_config",
    "sparse_config",
    "stream_config",
    "guarantee_of",
]

MIN_WINDOW = 12


@dataclass(frozen=True)
class SchemeConfig:
    kind: str                    # "additive" | "multiplicative" | "sparse"
    n: int                       # declared maximum internal text length
    levels: tuple[LevelSpec, ...]
    top: int                     # largest level exponent L
    uniform: bool                # levels are exactly 0..top
    param: float                 # E or eps as requested
    guarantee: float             # radius bound: 2^L (additive) or ratio

    def max_window_chars(self) -> int | None:
        """Characters after which a position can never be a landmark again.

        None when some level is unbounded. Includes one extra grid step per
        level so that pruning never discards a still-reachable position.
        """
        best = 0
        for spec in self.levels:
            if spec.b is None:
                return None
            best = max(best, (spec.b + 1) << spec.lam)
        return best


def additive_config(n: int, e: int) -> SchemeConfig:
    """Schedule with additive radius error at most e (a positive integer)."""
    if e < 1:
        raise ValueError("additive error must be at least 1")
    if n < 1:
        raise ValueError("n must be positive")
    top = e.bit_length() - 1  # floor(log2 e), so 2^top <= e
    levels = [LevelSpec(lam, MIN_WINDOW) for lam in range(top)]
    levels.append(LevelSpec(top, None))
    return SchemeConfig(
        kind="additive",
        n=n,
        levels=tuple(levels),
        top=top,
        uniform=True,
        param=float(e),
        guarantee=float(1 << top),
    )


def multiplicative_config(n: int, eps: float) -> SchemeConfig:
    """Schedule with multiplicative radius error at most 1 + eps."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    eps = min(eps, 1.0)
    frac = Fraction(eps).limit_denominator(1_000_000)
    d = max(MIN_WINDOW, 5 + math.ceil(Fraction(4) / frac))
    # every level is bounded, so the top window must span the whole text:
    # a palindromic suffix of length r keeps its mirror at distance 2r < 2n
    top = 0
    while (d - 1) << top < n:
        top += 1
    levels = [LevelSpec(lam, d) for lam in range(top + 1)]
    return SchemeConfig(
        kind="multiplicative",
        n=n,
        levels=tuple(levels),
        top=top,
        uniform=True,
        param=eps,
        guarantee=(d - 1) / (d - 5),
    )


def sparse_config(n: int, eps: float) -> SchemeConfig:
    """One landmark per level; factor (1 + eps) for eps >= 1 (empirical)."""
    if eps < 1:
        raise ValueError("the sparse schedule requires eps >= 1")
    k = int(math.floor(math.log2(1 + eps)))
    count = int(math.floor(math.log2(n) / k)) if n > 1 else 0
    # a constant number of recent multiples per geometric level: enough for
    # a landmark to survive until the mirror position sweeps past it
    b = 8
    levels = [LevelSpec(0, b, ghost_mult=1)]
    levels += [LevelSpec(k * i, b, ghost_mult=1) for i in range(1, count + 1)]
    return SchemeConfig(
        kind="sparse",
        n=n,
        levels=tuple(levels),
        top=k * count if count else 0,
        uniform=False,
        param=eps,
        guarantee=1.0 + eps,
    )


def stream_config(cfg: SchemeConfig) -> SchemeConfig:
    """The same schedule re-sized for the doubled stream the engines consume.

    Engines feed every input symbol twice, so window reach has to be chosen
    for a text of length 2n; the error parameter is unchanged.
    """
    if cfg.kind == "additive":
        return additive_config(2 * cfg.n, int(cfg.param))
    if cfg.kind == "multiplicative":
        return multiplicative_config(2 * cfg.n, cfg.param)
    return sparse_config(2 * cfg.n, cfg.param)


def guarantee_of(cfg: SchemeConfig) -> float:
    """Additive: radius slack 2^L. Multiplicative/sparse: worst-case ratio."""
    return cfg.guarantee
