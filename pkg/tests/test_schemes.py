"""Unit tests for the landmark level schedules."""

from __future__ import annotations

import pytest

from palstream.schemes import (
    additive_config,
    guarantee_of,
    multiplicative_config,
    sparse_config,
    stream_config,
)


def test_additive_level_layout():
    """Additive error 16 uses bounded levels 0..3 and an unbounded level 4."""
    cfg = additive_config(4096, 16)
    assert cfg.top == 4
    assert [spec.lam for spec in cfg.levels] == [0, 1, 2, 3, 4]
    assert [spec.b for spec in cfg.levels] == [12, 12, 12, 12, None]
    assert cfg.guarantee == 16.0
    assert cfg.max_window_chars() is None


def test_additive_error_one_is_exhaustive():
    """Error 1 keeps every position: a single unbounded level 0."""
    cfg = additive_config(100, 1)
    assert cfg.top == 0 and cfg.levels[0].b is None
    assert guarantee_of(cfg) == 1.0


@pytest.mark.parametrize(
    "eps,d", [(0.1, 45), (0.25, 21), (0.5, 13), (1.0, 12)]
)
def test_multiplicative_window_width(eps, d):
    """The window width D = max(12, 5 + ceil(4/eps)) drives the ratio bound."""
    cfg = multiplicative_config(4096, eps)
    assert all(spec.b == d for spec in cfg.levels)
    assert cfg.guarantee == (d - 1) / (d - 5)
    assert cfg.guarantee <= 1 + eps + 1e-12


@pytest.mark.parametrize("eps", [0.1, 0.25, 0.5, 1.0])
@pytest.mark.parametrize("n", [64, 1000, 4096, 1 << 18])
def test_multiplicative_top_window_spans_text(eps, n):
    """The largest bounded window must reach every position of the text."""
    cfg = multiplicative_config(n, eps)
    d = cfg.levels[0].b
    assert (d - 1) << cfg.top >= n
    assert cfg.top == 0 or (d - 1) << (cfg.top - 1) < n


def test_sparse_levels_are_constant_width():
    """The sparse schedule keeps O(1) landmarks per geometric level."""
    cfg = sparse_config(1 << 10, 3.0)
    assert all(spec.b == 8 for spec in cfg.levels)
    assert [spec.lam for spec in cfg.levels] == [0, 2, 4, 6, 8, 10]
    assert not cfg.uniform
    assert guarantee_of(cfg) == 4.0


def test_stream_config_resizes_for_doubled_text():
    """Engines feed symbols twice, so windows are sized for length 2n."""
    cfg = multiplicative_config(1000, 0.25)
    doubled = stream_config(cfg)
    assert doubled.n == 2000
    assert doubled.param == cfg.param
    d = doubled.levels[0].b
    assert (d - 1) << doubled.top >= 2000


def test_parameter_validation():
    """Out-of-range error parameters are rejected."""
    with pytest.raises(ValueError):
        additive_config(100, 0)
    with pytest.raises(ValueError):
        multiplicative_config(100, 0.0)
    with pytest.raises(ValueError):
        sparse_config(100, 0.5)
