import math

import numpy as np
import pytest

from sparsestereo.matching import (MatchConfig, match_dense_ncc, match_dense_sad,
                                   match_sparse, sad_cost)
from conftest import clamp_shifted_pair
from sparsestereo.colorspace import rgb_to_lightness


def lightness_pair(shift, h=24, w=40, seed=0):
    left, right = clamp_shifted_pair(h, w, shift, seed=seed)
    return rgb_to_lightness(left), rgb_to_lightness(right)


def test_config_validation():
    with pytest.raises(ValueError):
        MatchConfig(block=4)
    with pytest.raises(ValueError):
        MatchConfig(d_max=-1)


def test_sad_cost_identical_images():
    rng = np.random.default_rng(0)
    img = rng.uniform(0, 100, size=(9, 11))
    for y in range(9):
        for x in range(11):
            assert sad_cost(img, img, x, y, 0, 3) == 0.0


def test_sad_cost_exact_shift():
    ll, rl = lightness_pair(3)
    assert sad_cost(ll, rl, 20, 10, 3, 5) == pytest.approx(0.0, abs=1e-9)


def test_sad_cost_invalid_candidate():
    img = np.zeros((4, 4))
    assert sad_cost(img, img, 1, 0, 5, 3) == math.inf


def test_sad_cost_constant_offset_invariance():
    rng = np.random.default_rng(1)
    l = rng.uniform(0, 80, size=(10, 14))
    r = rng.uniform(0, 80, size=(10, 14))
    a = sad_cost(l, r, 7, 5, 2, 5)
    b = sad_cost(l + 13.5, r + 13.5, 7, 5, 2, 5)
    assert a == pytest.approx(b)


def test_dense_sad_identical_images():
    rng = np.random.default_rng(2)
    img = rng.uniform(0, 100, size=(12, 16))
    cfg = MatchConfig(block=3, d_max=6)
    assert not match_dense_sad(img, img, cfg).any()


def test_dense_sad_recovers_shift():
    for s in (2, 5):
        ll, rl = lightness_pair(s, seed=s)
        cfg = MatchConfig(block=5, d_max=8)
        disp = match_dense_sad(ll, rl, cfg)
        assert (disp[:, s + cfg.block // 2:] == s).all()


def test_dense_sad_matches_per_pixel_cost_oracle():
    rng = np.random.default_rng(3)
    l = rng.uniform(0, 100, size=(8, 12))
    r = rng.uniform(0, 100, size=(8, 12))
    cfg = MatchConfig(block=3, d_max=5)
    disp = match_dense_sad(l, r, cfg)
    for y in range(8):
        for x in range(12):
            costs = [sad_cost(l, r, x, y, d, cfg.block) for d in range(cfg.d_max + 1)]
            assert disp[y, x] == int(np.argmin(costs))


def test_sparse_border_columns_only():
    rng = np.random.default_rng(4)
    l = rng.uniform(0, 100, size=(6, 9))
    sparse = match_sparse(l, l, np.zeros((6, 9), dtype=bool), MatchConfig(3, 4))
    assert (sparse[:, 0] > -1).all() and (sparse[:, -1] > -1).all()
    assert (sparse[:, 1:-1] == -1).all()


def test_sparse_agrees_with_dense():
    rng = np.random.default_rng(5)
    for _ in range(20):
        ll, rl = lightness_pair(3, seed=int(rng.integers(1000)))
        mask = rng.random(ll.shape) < 0.3
        cfg = MatchConfig(block=5, d_max=7)
        sparse = match_sparse(ll, rl, mask, cfg)
        dense = match_dense_sad(ll, rl, cfg)
        computed = sparse > -1
        assert (sparse[computed] == dense[computed]).all()
        expected_mask = mask.copy()
        expected_mask[:, 0] = expected_mask[:, -1] = True
        assert (computed == expected_mask).all()


def test_sparse_recovers_shift():
    s = 4
    ll, rl = lightness_pair(s, seed=9)
    rng = np.random.default_rng(6)
    mask = rng.random(ll.shape) < 0.4
    disp = match_sparse(ll, rl, mask, MatchConfig(block=5, d_max=8))
    region = disp[:, s + 2:]
    known = region > -1
    assert (region[known] == s).all()


def test_dense_ncc_identical_and_shift():
    ll, rl = lightness_pair(4, seed=11)
    cfg = MatchConfig(block=5, d_max=8)
    assert not match_dense_ncc(ll, ll, cfg).any()
    disp = match_dense_ncc(ll, rl, cfg)
    assert (disp[:, 4 + cfg.block // 2:] == 4).all()


def test_dense_ncc_flat_images():
    flat = np.full((8, 10), 40.0)
    assert not match_dense_ncc(flat, flat, MatchConfig(3, 5)).any()


def test_ncc_affine_invariance():
    ll, rl = lightness_pair(3, seed=13)
    cfg = MatchConfig(block=5, d_max=6)
    base = match_dense_ncc(ll, rl, cfg)
    assert (match_dense_ncc(2.5 * ll + 7.0, rl, cfg) == base).all()
    assert (match_dense_ncc(ll, 0.3 * rl + 11.0, cfg) == base).all()


def test_output_range():
    rng = np.random.default_rng(7)
    l = rng.uniform(0, 100, size=(10, 15))
    r = rng.uniform(0, 100, size=(10, 15))
    cfg = MatchConfig(3, 6)
    for disp in (match_dense_sad(l, r, cfg), match_dense_ncc(l, r, cfg)):
        assert disp.min() >= 0 and disp.max() <= cfg.d_max


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        match_dense_sad(np.zeros((3, 3)), np.zeros((3, 4)), MatchConfig(3, 2))
    with pytest.raises(ValueError):
        match_sparse(np.zeros((3, 3)), np.zeros((3, 3)),
                     np.zeros((2, 3), dtype=bool), MatchConfig(3, 2))
