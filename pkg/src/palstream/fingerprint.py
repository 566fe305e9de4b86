"""Polynomial fingerprints over a Mersenne prime field.

A fingerprint of a word w = w[1..k] over symbols 1..sigma packs five values:

    len   k
    fwd   w[1] + w[2]*x + ... + w[k]*x^(k-1)   (mod p)
    rev   the same polynomial of the reversed word
    pw    x^k                                   (mod p)
    ipw   x^(-k)                                (mod p)

Keeping both directions plus the length powers makes four O(1) editing
operations possible: concatenation, erasing a known prefix, erasing a known
suffix, and reversal.  A word reads the same forwards and backwards exactly
when fwd == rev, which is the palindrome test used everywhere else in this
package.

The production modulus is p = 2^61 - 1 so that all arithmetic stays in
native machine words on a 64-bit build of CPython; x is drawn uniformly
from [1, p-1] by a seeded generator.  Small-field parameters (e.g. p = 97)
can be constructed directly for worked examples in tests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

MERSENNE61 = (1 << 61) - 1

__all__ = [
    "MERSENNE61",
    "HashParams",
    "Fingerprint",
    "params_new",
    "fp_empty",
    "fp_of",
    "append_char",
    "concat",
    "erase_prefix",
    "erase_suffix",
    "reverse_fp",
    "is_self_palindrome",
]


@dataclass(frozen=True, slots=True)
class HashParams:
    """Field modulus and evaluation point shared by a family of fingerprints."""

    p: int
    x: int
    x_inv: int

    def __post_init__(self) -> None:
        if not (1 <= self.x < self.p):
            raise ValueError("x must lie in [1, p-1]")
        if (self.x * self.x_inv) % self.p != 1:
            raise ValueError("x_inv is not the inverse of x")


@dataclass(frozen=True, slots=True)
class Fingerprint:
    length: int
    fwd: int
    rev: int
    pw: int
    ipw: int


def params_new(n: int, seed: int) -> HashParams:
    """Fresh parameters for texts of length at most n, deterministic in seed."""
    if n < 1:
        raise ValueError("n must be positive")
    p = MERSENNE61
    x = random.Random(seed).randrange(1, p)
    return HashParams(p=p, x=x, x_inv=pow(x, p - 2, p))


def fp_empty(params: HashParams) -> Fingerprint:
    return Fingerprint(0, 0, 0, 1, 1)


def fp_of(params: HashParams, symbols) -> Fingerprint:
    """Fingerprint of an explicit symbol sequence (symbols are ints in [1, p))."""
    fp = fp_empty(params)
    for a in symbols:
        fp = append_char(params, fp, a)
    return fp


def append_char(params: HashParams, fp: Fingerprint, a: int) -> Fingerprint:
    """Fingerprint of w·a given the fingerprint of w."""
    p = params.p
    if not (0 < a < p):
        raise ValueError("symbol out of range")
    return Fingerprint(
        fp.length + 1,
        (fp.fwd + a * fp.pw) % p,
        (fp.rev * params.x + a) % p,
        (fp.pw * params.x) % p,
        (fp.ipw * params.x_inv) % p,
    )


def concat(params: HashParams, w: Fingerprint, v: Fingerprint) -> Fingerprint:
    """Fingerprint of wv."""
    p = params.p
    return Fingerprint(
        w.length + v.length,
        (w.fwd + v.fwd * w.pw) % p,
        (v.rev + w.rev * v.pw) % p,
        (w.pw * v.pw) % p,
        (w.ipw * v.ipw) % p,
    )


def erase_prefix(params: HashParams, wv: Fingerprint, w: Fingerprint) -> Fingerprint:
    """Fingerprint of v given fingerprints of wv and of its prefix w."""
    p = params.p
    if w.length > wv.length:
        raise ValueError("prefix longer than word")
    pw_v = (wv.pw * w.ipw) % p
    return Fingerprint(
        wv.length - w.length,
        ((wv.fwd - w.fwd) * w.ipw) % p,
        (wv.rev - w.rev * pw_v) % p,
        pw_v,
        (wv.ipw * w.pw) % p,
    )


def erase_suffix(params: HashParams, wv: Fingerprint, v: Fingerprint) -> Fingerprint:
    """Fingerprint of w given fingerprints of wv and of its suffix v."""
    p = params.p
    if v.length > wv.length:
        raise ValueError("suffix longer than word")
    pw_w = (wv.pw * v.ipw) % p
    return Fingerprint(
        wv.length - v.length,
        (wv.fwd - v.fwd * pw_w) % p,
        ((wv.rev - v.rev) * v.ipw) % p,
        pw_w,
        (wv.ipw * v.pw) % p,
    )


def reverse_fp(params: HashParams, fp: Fingerprint) -> Fingerprint:
    return Fingerprint(fp.length, fp.rev, fp.fwd, fp.pw, fp.ipw)


def is_self_palindrome(fp: Fingerprint) -> bool:
    """Whether the fingerprinted word equals its own reverse (up to collisions)."""
    return fp.fwd == fp.rev
