"""Streaming approximation of the longest palindromic substring.

A text is consumed one symbol at a time; after every symbol the engine
reports an approximation of the longest palindromic substring seen so far,
under a user-selected additive (OPT - answer <= E) or multiplicative
(OPT <= (1+eps) * answer) error contract, in memory far below the text
length.  Exact offline oracles, deterministic input generators, and a
verification/benchmark CLI are included.
"""

from .engine_basic import BasicEngine, feed_doubled, symbol_codes
from .engine_compressed import (
    CompressedEngine,
    NativeCompressedEngine,
    compressed_engine,
    native_available,
)
from .fingerprint import MERSENNE61, Fingerprint, HashParams, params_new
from .genlib import generate
from .landmarks import LandmarkStore, LevelSpec
from .oracle import brute_longest, manacher_longest, prefix_longest
from .partition import Partition
from .schemes import (
    SchemeConfig,
    additive_config,
    multiplicative_config,
    sparse_config,
    stream_config,
)

__version__ = "0.1.0"

__all__ = [
    "BasicEngine",
    "CompressedEngine",
    "NativeCompressedEngine",
    "compressed_engine",
    "native_available",
    "feed_doubled",
    "symbol_codes",
    "MERSENNE61",
    "Fingerprint",
    "HashParams",
    "params_new",
    "generate",
    "LandmarkStore",
    "LevelSpec",
    "brute_longest",
    "manacher_longest",
    "prefix_longest",
    "Partition",
    "SchemeConfig",
    "additive_config",
    "multiplicative_config",
    "sparse_config",
    "stream_config",
    "__version__",
]
