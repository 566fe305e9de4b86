"""Deterministic test-input generators, addressable by a small JSON spec.

Every generator is a pure function of its spec, so corpora referenced in
tests and benchmarks can be regenerated from a one-line description:

    {"kind": "random",   "length": 1000, "k": 2, "seed": 7}
    {"kind": "periodic", "length": 1000, "period": "aab"}
    {"kind": "planted",  "length": 1000, "k": 4, "seed": 7,
     "pal_len": 333, "pal_pos": 100}
    {"kind": "nu",       "length": 1000}
    {"kind": "morphism", "sigma": 3, "source": "abcab"}

The ``nu`` word 0 1 00 11 000 111 ... has vanishing palindromic density:
its longest palindromic substring grows far slower than the text.  The
``morphism`` generator applies a palindrome-length-multiplying substitution
to a random source word: each source symbol c in {0..sigma} maps to the
block 1^c 0 1^(sigma-c) 1 0 0 1 1^(sigma-c) 0 1^c of length 2*sigma + 6,
and the longest palindrome of the image is at least 2*sigma + 6 times the
source optimum but less than 2*sigma + 6 times the next integer, which
gives corpora with large, tightly bracketed optima.
"""

from __future__ import annotations

import json
import random

__all__ = [
    "nu",
    "morphism_block",
    "morphism_image",
    "random_word",
    "periodic_word",
    "planted_word",
    "generate",
]

ALPHABET = "abcdefghijklmnopqrstuvwxyz0123456789"


def nu(n: int) -> str:
    """First n characters of 01 0011 000111 0000 1111 ..."""
    out: list[str] = []
    k = 1
    total = 0
    while total < n:
        out.append("0" * k)
        out.append("1" * k)
        total += 2 * k
        k += 1
    return "".join(out)[:n]


def morphism_block(c: int, sigma: int) -> str:
    if not 0 <= c <= sigma:
        raise ValueError("symbol out of range")
    return (
        "1" * c + "0" + "1" * (sigma - c) + "1" + "00" + "1" + "1" * (sigma - c)
        + "0" + "1" * c
    )


def morphism_image(source: list[int], sigma: int) -> str:
    return "".join(morphism_block(c, sigma) for c in source)


def random_word(n: int, sigma: int, seed: int) -> str:
    rng = random.Random(seed)
    letters = ALPHABET[:sigma]
    return "".join(rng.choice(letters) for _ in range(n))


def periodic_word(n: int, unit: str) -> str:
    if not unit:
        raise ValueError("empty period unit")
    return (unit * (n // len(unit) + 1))[:n]


def planted_word(
    n: int, sigma: int, seed: int, pal: int, pos: int | None = None
) -> str:
    """Random word with a palindrome of length pal planted at pos (or randomly)."""
    if pal > n:
        raise ValueError("planted palindrome longer than the word")
    rng = random.Random(seed)
    letters = ALPHABET[:sigma]
    core = "".join(rng.choice(letters) for _ in range(pal // 2))
    mid = rng.choice(letters) if pal & 1 else ""
    block = core + mid + core[::-1]
    if pos is None:
        pos = rng.randrange(n - pal + 1)
    elif not 0 <= pos <= n - pal:
        raise ValueError("planted palindrome does not fit at that position")
    left = "".join(rng.choice(letters) for _ in range(pos))
    right = "".join(rng.choice(letters) for _ in range(n - pal - pos))
    return left + block + right


def generate(spec: dict | str) -> str:
    """Produce the word described by a generator spec (dict or JSON)."""
    if isinstance(spec, str):
        spec = json.loads(spec)
    kind = spec["kind"]
    if kind == "morphism":
        sigma = int(spec["sigma"])
        src = spec.get("source")
        if src is None:
            # a random source word instead of an explicit one
            rng = random.Random(int(spec.get("seed", 0)))
            m = int(spec.get("m", 16))
            source = [rng.randint(1, sigma) for _ in range(m)]
        elif isinstance(src, str):
            source = [ALPHABET.index(ch) + 1 for ch in src]
        else:
            source = [int(c) for c in src]
        return morphism_image(source, sigma)
    n = int(spec.get("length", spec.get("n", -1)))
    if n < 0:
        raise ValueError("length must be non-negative")
    seed = int(spec.get("seed", 0))
    k = int(spec.get("k", spec.get("sigma", 2)))
    if kind == "nu":
        return nu(n)
    if kind == "periodic":
        return periodic_word(n, str(spec.get("period", spec.get("unit", ""))))
    if k < 2:
        raise ValueError("alphabet size must be at least 2")
    if kind == "random":
        return random_word(n, k, seed)
    if kind == "planted":
        pal = int(spec.get("pal_len", spec.get("pal", max(1, n // 3))))
        pos = spec.get("pal_pos")
        return planted_word(n, k, seed, pal, None if pos is None else int(pos))
    raise ValueError(f"unknown generator kind: {kind!r}")
