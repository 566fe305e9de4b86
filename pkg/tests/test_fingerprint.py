"""Unit and property tests for the fingerprint algebra."""

from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import given

from palstream.fingerprint import (
    Fingerprint,
    HashParams,
    append_char,
    concat,
    erase_prefix,
    erase_suffix,
    fp_empty,
    fp_of,
    is_self_palindrome,
    params_new,
    reverse_fp,
)

PARAMS = params_new(1 << 20, seed=7)
SMALL = HashParams(p=97, x=10, x_inv=pow(10, 95, 97))

words = st.lists(st.integers(min_value=1, max_value=255), max_size=48)


def test_small_field_worked_example():
    """With p=97, x=10 the word (1,2) hashes to fwd=21, rev=12, pw=3."""
    fp = fp_of(SMALL, [1, 2])
    assert (fp.length, fp.fwd, fp.rev, fp.pw) == (2, 21, 12, 3)
    assert (fp.pw * fp.ipw) % 97 == 1


def test_small_field_palindrome_example():
    """(1,2)+(1) concatenates to the palindrome (1,2,1) with fwd == rev == 24."""
    fp = concat(SMALL, fp_of(SMALL, [1, 2]), fp_of(SMALL, [1]))
    assert (fp.length, fp.fwd, fp.rev) == (3, 24, 24)
    assert is_self_palindrome(fp)


def test_empty_fingerprint_is_identity():
    """The empty fingerprint is a two-sided identity for concatenation."""
    w = fp_of(PARAMS, [3, 1, 4, 1, 5])
    e = fp_empty(PARAMS)
    assert concat(PARAMS, e, w) == w
    assert concat(PARAMS, w, e) == w


@given(words, words)
def test_concat_matches_character_built(u, v):
    """concat(fp(u), fp(v)) equals the fingerprint built from u+v directly."""
    assert concat(PARAMS, fp_of(PARAMS, u), fp_of(PARAMS, v)) == fp_of(PARAMS, u + v)


@given(words, words)
def test_erase_prefix_inverts_concat(u, v):
    """Erasing the prefix u from fp(u+v) recovers fp(v)."""
    uv = fp_of(PARAMS, u + v)
    assert erase_prefix(PARAMS, uv, fp_of(PARAMS, u)) == fp_of(PARAMS, v)


@given(words, words)
def test_erase_suffix_inverts_concat(u, v):
    """Erasing the suffix v from fp(u+v) recovers fp(u)."""
    uv = fp_of(PARAMS, u + v)
    assert erase_suffix(PARAMS, uv, fp_of(PARAMS, v)) == fp_of(PARAMS, u)


@given(words)
def test_reverse_matches_reversed_word(u):
    """reverse_fp(fp(u)) equals the fingerprint of u reversed."""
    assert reverse_fp(PARAMS, fp_of(PARAMS, u)) == fp_of(PARAMS, u[::-1])


@given(words)
def test_append_char_agrees_with_concat(u):
    """Appending one symbol equals concatenation with a single-symbol word."""
    fp = fp_of(PARAMS, u)
    assert append_char(PARAMS, fp, 9) == concat(PARAMS, fp, fp_of(PARAMS, [9]))


@given(words)
def test_self_palindrome_detection(u):
    """fwd == rev exactly on words equal to their own reversal (w.h.p.)."""
    assert is_self_palindrome(fp_of(PARAMS, u)) == (u == u[::-1])


def test_fingerprint_is_immutable():
    """Fingerprints are frozen value objects."""
    fp = fp_of(PARAMS, [1, 2, 3])
    assert fp == Fingerprint(fp.length, fp.fwd, fp.rev, fp.pw, fp.ipw)
