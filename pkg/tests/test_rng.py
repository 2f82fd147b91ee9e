"""Stream identity, reproducibility, and sampler support checks."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bidisc_lab.rng import (
    RngStream,
    sample_ball,
    sample_bidisc,
    sample_disc,
    sample_real_pair,
)

# Frozen at first build: PCG64 seeded with SeedSequence([42, 0]).  The
# generator is documented as portable, so this value must never drift.
GOLDEN_FIRST_UNIFORM = 0.7739560485559633


def test_golden_first_draw():
    assert RngStream(42, 0).gen.random() == GOLDEN_FIRST_UNIFORM


def test_same_stream_reproduces():
    a = RngStream(42, 5).gen.random(10)
    b = RngStream(42, 5).gen.random(10)
    np.testing.assert_array_equal(a, b)


def test_distinct_streams_differ():
    a = RngStream(42, 1).gen.random(4)
    b = RngStream(42, 2).gen.random(4)
    assert not np.array_equal(a, b)


def test_distinct_seeds_differ():
    a = RngStream(1, 0).gen.random(4)
    b = RngStream(2, 0).gen.random(4)
    assert not np.array_equal(a, b)


@given(seed=st.integers(0, 2**64 - 1), stream=st.integers(0, 2**64 - 1))
def test_any_stream_is_reproducible(seed: int, stream: int):
    assert RngStream(seed, stream).gen.random() == RngStream(seed, stream).gen.random()


@pytest.mark.parametrize("seed,stream", [(-1, 0), (0, -1), (2**64, 0), (0, 2**64)])
def test_stream_ids_must_be_uint64(seed, stream):
    with pytest.raises(ValueError):
        RngStream(seed, stream)


def test_disc_sampler_respects_radius():
    rng = RngStream(42, 0)
    pts = [sample_disc(rng, 0.3) for _ in range(500)]
    assert max(abs(z) for z in pts) < 0.3


def test_bidisc_and_ball_samplers():
    rng = RngStream(42, 0)
    for _ in range(200):
        z, w = sample_bidisc(rng, 0.95)
        assert abs(z) < 0.95 and abs(w) < 0.95
    for _ in range(200):
        u, v = sample_ball(rng, 0.95)
        assert abs(u) ** 2 + abs(v) ** 2 < 0.95**2


def test_real_pair_annulus():
    rng = RngStream(42, 3)
    for _ in range(300):
        z, w = sample_real_pair(rng, 0.9, rmin=0.2)
        r = (z * z + w * w) ** 0.5
        assert 0.2 <= r < 0.9


@pytest.mark.parametrize("rmax", [0.0, 1.0, 1.5, -0.2])
def test_bad_radius_rejected(rmax):
    with pytest.raises(ValueError):
        sample_disc(RngStream(0, 0), rmax)
