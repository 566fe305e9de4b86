"""Unit and property tests for segment descriptions (densify, buffer, merge helpers)."""

from __future__ import annotations

import math

import hypothesis.strategies as st
from hypothesis import given

from palstream.segments import buffer_touch, densify, reconcile


def test_densify_worked_examples():
    """A centre list compresses to (first, 2*gcd of the gaps)."""
    assert densify([10, 14, 16, 18, 22]) == (10, 4)
    assert densify([8, 11, 14, 17, 20]) == (8, 6)


@given(
    st.integers(min_value=1, max_value=1000),
    st.integers(min_value=1, max_value=16),
    st.lists(st.integers(min_value=1, max_value=8), min_size=4, max_size=10),
)
def test_densify_step_divides_all_gaps(first, g, multipliers):
    """The reported step is twice the gcd of consecutive centre gaps."""
    centres = [first]
    for m in multipliers:
        centres.append(centres[-1] + m * g)
    anchor, p = densify(centres)
    assert anchor == first
    gaps = [b - a for a, b in zip(centres, centres[1:])]
    assert p == 2 * math.gcd(*gaps)


def test_reconcile_is_gcd_of_periods():
    """Merging period estimates always takes the gcd."""
    assert reconcile(6, 4) == 2
    assert reconcile(8, 4) == 4
    assert reconcile(3, 5) == 1
    assert reconcile(7, 7) == 7


@given(st.integers(min_value=1, max_value=64), st.integers(min_value=1, max_value=64))
def test_reconcile_divides_both(p_new, p_old):
    """The reconciled period divides both inputs."""
    q = reconcile(p_new, p_old)
    assert p_new % q == 0 and p_old % q == 0


def test_buffer_touch_keeps_five_most_recent():
    """The buffer holds at most five entries, most recently touched first."""
    buf: list[list[int]] = []
    for c in range(1, 8):
        buffer_touch(buf, c, c * 10)
    assert len(buf) == 5
    assert [e[0] for e in buf] == [7, 6, 5, 4, 3]


def test_buffer_touch_updates_existing_centre():
    """Touching a known centre moves it to the front and grows its radius."""
    buf: list[list[int]] = []
    buffer_touch(buf, 3, 5)
    buffer_touch(buf, 9, 2)
    buffer_touch(buf, 3, 8)
    assert buf[0] == [3, 8]
    assert len(buf) == 2


def test_buffer_touch_never_shrinks_radius():
    """A smaller re-observation does not overwrite a larger stored radius."""
    buf: list[list[int]] = []
    buffer_touch(buf, 4, 9)
    buffer_touch(buf, 4, 2)
    assert buf == [[4, 9]]
