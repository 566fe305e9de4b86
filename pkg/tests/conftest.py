"""Shared helpers for the test suite."""

from __future__ import annotations

from palstream import (
    BasicEngine,
    SchemeConfig,
    compressed_engine,
    feed_doubled,
    prefix_longest,
)


def prefix_answers(text: str, cfg: SchemeConfig, seed: int = 0, engine: str = "basic"):
    """Per-prefix engine answers for text (longest-palindrome lengths)."""
    if engine == "basic":
        eng = BasicEngine(cfg, seed)
    elif engine == "compressed":
        eng = compressed_engine(cfg, seed)
    elif engine == "compressed-pure":
        eng = compressed_engine(cfg, seed, native=False)
    else:
        raise ValueError(engine)
    return feed_doubled(eng, text)


def prefix_opt(text: str):
    """Per-prefix exact longest-palindrome lengths."""
    return prefix_longest(text)
