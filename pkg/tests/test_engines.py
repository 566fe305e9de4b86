"""Behavioural tests for the basic and compressed streaming engines."""

from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import given, settings
import pytest

from palstream import (
    BasicEngine,
    CompressedEngine,
    additive_config,
    compressed_engine,
    feed_doubled,
    multiplicative_config,
    native_available,
    sparse_config,
)
from palstream.genlib import periodic_word, planted_word, random_word

from conftest import prefix_answers, prefix_opt

texts = st.text(alphabet="ab", min_size=1, max_size=96)


@given(texts)
@settings(max_examples=80, deadline=None)
def test_error_one_is_exact_basic(s):
    """With additive error 1 the basic engine matches the oracle everywhere."""
    cfg = additive_config(len(s), 1)
    assert prefix_answers(s, cfg, engine="basic") == prefix_opt(s)


@given(texts)
@settings(max_examples=80, deadline=None)
def test_error_one_is_exact_compressed(s):
    """With additive error 1 the compressed engine matches the oracle everywhere."""
    cfg = additive_config(len(s), 1)
    assert prefix_answers(s, cfg, engine="compressed-pure") == prefix_opt(s)


@given(st.text(alphabet="abcd", min_size=1, max_size=120), st.sampled_from([2, 8]))
@settings(max_examples=60, deadline=None)
def test_additive_bound_both_engines(s, e):
    """Answers never exceed the optimum and lag it by at most the error budget."""
    cfg = additive_config(len(s), e)
    opt = prefix_opt(s)
    for engine in ("basic", "compressed-pure"):
        ans = prefix_answers(s, cfg, engine=engine)
        assert all(a <= o and o - a <= e for a, o in zip(ans, opt))


@given(st.text(alphabet="ab", min_size=1, max_size=120))
@settings(max_examples=60, deadline=None)
def test_multiplicative_bound_both_engines(s):
    """With eps=0.5 every nonzero optimum is within ratio (D-1)/(D-5) of the answer."""
    cfg = multiplicative_config(len(s), 0.5)
    ratio = cfg.guarantee
    opt = prefix_opt(s)
    for engine in ("basic", "compressed-pure"):
        ans = prefix_answers(s, cfg, engine=engine)
        for a, o in zip(ans, opt):
            assert a <= o
            if o >= 1:
                assert o <= ratio * a


@given(texts)
@settings(max_examples=40, deadline=None)
def test_answers_are_nondecreasing(s):
    """A longest-palindrome stream answer can never shrink."""
    cfg = multiplicative_config(len(s), 1.0)
    ans = prefix_answers(s, cfg, engine="compressed-pure")
    assert ans == sorted(ans)


def test_sparse_scheme_on_basic_engine():
    """The single-landmark-per-level schedule meets its empirical ratio bound."""
    for eps in (1.0, 3.0):
        for word in (
            random_word(600, 2, 11),
            periodic_word(500, "aab"),
            planted_word(400, 2, seed=2, pal=201),
        ):
            cfg = sparse_config(len(word), eps)
            opt = prefix_opt(word)
            ans = prefix_answers(word, cfg, engine="basic")
            for a, o in zip(ans, opt):
                assert a <= o
                if o >= 1:
                    assert o <= (1 + eps) * a


def test_compressed_never_below_basic_small_exhaustive():
    """On all short binary words the compressed answer dominates the basic one."""
    for n in range(1, 9):
        for bits in range(1 << n):
            s = "".join("ab"[(bits >> i) & 1] for i in range(n))
            cfg = additive_config(n, 2)
            basic = prefix_answers(s, cfg, engine="basic")
            comp = prefix_answers(s, cfg, engine="compressed-pure")
            assert all(c >= b for b, c in zip(basic, comp))


def test_seed_changes_hash_not_answers():
    """Different fingerprint seeds give identical answers w.h.p."""
    word = random_word(400, 4, 5)
    cfg = additive_config(len(word), 8)
    a0 = prefix_answers(word, cfg, seed=0, engine="basic")
    a1 = prefix_answers(word, cfg, seed=12345, engine="basic")
    assert a0 == a1


def test_memory_accounting_peaks():
    """words_current stays below the recorded peak for both engines."""
    word = random_word(300, 2, 3)
    for eng in (
        BasicEngine(additive_config(300, 8)),
        CompressedEngine(multiplicative_config(300, 0.5)),
    ):
        feed_doubled(eng, word)
        eng.note_peak()
        assert eng.words_current() <= eng.peak_words()


@pytest.mark.skipif(not native_available(), reason="compiled kernel not built")
def test_native_kernel_matches_pure_engine():
    """The compiled engine is observationally identical to the pure one."""
    cases = [random_word(n, k, seed) for n in (37, 200, 701) for k in (2, 4) for seed in (1, 2)]
    cases += [periodic_word(512, "ab"), periodic_word(513, "aab"), "a" * 400]
    cases += [planted_word(600, 2, seed=7, pal=333, pos=100)]
    configs = [
        additive_config(701, 1),
        additive_config(701, 8),
        additive_config(701, 64),
        multiplicative_config(701, 0.25),
        multiplicative_config(701, 1.0),
    ]
    for word in cases:
        for cfg in configs:
            pure = CompressedEngine(cfg, seed=3)
            native = compressed_engine(cfg, seed=3, native=True)
            a_pure = feed_doubled(pure, word)
            a_nat = feed_doubled(native, word)
            pure.note_peak()
            native.note_peak()
            assert a_pure == a_nat
            assert pure.checks == native.checks
            assert pure.densifies == native.densifies
            assert pure.peak_words() == native.peak_words()
