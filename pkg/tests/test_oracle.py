"""Cross-checks between the three reference palindrome oracles."""

from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import given
import pytest

from palstream.oracle import (
    brute_longest,
    double,
    manacher_longest,
    manacher_radii,
    prefix_longest,
)

texts = st.text(alphabet="ab", max_size=120)


def test_known_values():
    """Hand-checked longest-palindrome lengths."""
    assert manacher_longest("") == 0
    assert manacher_longest("a") == 1
    assert manacher_longest("ab") == 1
    assert manacher_longest("abba") == 4
    assert manacher_longest("abacabad") == 7
    assert manacher_longest("aabbaabb") == 6


def test_double_transform():
    """double writes every symbol twice, for str, bytes and lists."""
    assert double("aba") == "aabbaa"
    assert double(b"ab") == b"aabb"
    assert double([3, 7]) == [3, 3, 7, 7]


@given(texts)
def test_manacher_matches_brute(s):
    """The linear-time oracle agrees with centre expansion."""
    assert manacher_longest(s) == brute_longest(s)


@given(st.text(alphabet="abcd", max_size=80))
def test_doubling_equivalence(s):
    """The longest palindrome of s is the largest even radius of double(s)."""
    radii = manacher_radii(double(s))
    even_best = max(radii[0::2]) if s else 0
    assert even_best // 2 == manacher_longest(s)


@given(texts)
def test_prefix_answers_match_per_prefix_oracle(s):
    """prefix_longest agrees with running the full oracle on every prefix."""
    assert prefix_longest(s) == [manacher_longest(s[:j]) for j in range(1, len(s) + 1)]


def test_prefix_answers_are_nondecreasing():
    """Adding characters can only grow the best palindrome seen so far."""
    answers = prefix_longest("abacabadabacaba")
    assert answers == sorted(answers)
    assert answers[-1] == 15


def test_oracle_guards():
    """Quadratic and per-prefix oracles refuse oversized inputs."""
    with pytest.raises(ValueError):
        brute_longest("a" * 10_001)
    with pytest.raises(ValueError):
        prefix_longest("a" * ((1 << 13) + 1))
