"""SAD and NCC block matching over lightness maps.

The left image is the target; a candidate disparity d compares the block
around (x, y) in the left map against the block around (x - d, y) in the
right map. Window coordinates are clamped to the image edges in both
images. Candidates with x - d < 0 are invalid. Ties break toward the
smallest d, which keeps every matcher deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

INVALID_COST = math.inf
SENTINEL = -1


@dataclass(frozen=True)
class MatchConfig:
    block: int = 7   # odd square window side
    d_max: int = 15  # inclusive maximum disparity

    def __post_init__(self):
        if self.block < 1 or self.block % 2 == 0:
            raise ValueError("block must be an odd positive integer")
        if self.d_max < 0:
            raise ValueError("d_max must be nonnegative")


def sad_cost(left: np.ndarray, right: np.ndarray, x: int, y: int, d: int,
             block: int) -> float:
    """Sum of |L_left - L_right| over the block window; inf when x - d < 0."""
    if d < 0:
        raise ValueError("disparity candidate must be nonnegative")
    if x - d < 0:
        return INVALID_COST
    h, w = left.shape
    r = block // 2
    ys = np.clip(np.arange(y - r, y + r + 1), 0, h - 1)
    xs = np.arange(x - r, x + r + 1)
    lwin = left[np.ix_(ys, np.clip(xs, 0, w - 1))]
    rwin = right[np.ix_(ys, np.clip(xs - d, 0, w - 1))]
    return float(np.abs(lwin - rwin).sum())


def _box_sum(padded: np.ndarray, block: int) -> np.ndarray:
    """Window sums over all block x block windows of an edge-padded array."""
    s = np.zeros((padded.shape[0] + 1, padded.shape[1] + 1))
    np.cumsum(np.cumsum(padded, axis=0), axis=1, out=s[1:, 1:])
    return (s[block:, block:] - s[:-block, block:]
            - s[block:, :-block] + s[:-block, :-block])


def _padded_rows_cols(h: int, w: int, r: int):
    rows = np.clip(np.arange(-r, h + r), 0, h - 1)
    cols = np.arange(-r, w + r)
    return rows, cols


def _sad_volume(left: np.ndarray, right: np.ndarray, cfg: MatchConfig) -> np.ndarray:
    """Cost volume (d_max+1, H, W); invalid candidates hold +inf."""
    h, w = left.shape
    r = cfg.block // 2
    rows, cols = _padded_rows_cols(h, w, r)
    lpad = left[np.ix_(rows, np.clip(cols, 0, w - 1))]
    vol = np.empty((cfg.d_max + 1, h, w))
    for d in range(cfg.d_max + 1):
        rpad = right[np.ix_(rows, np.clip(cols - d, 0, w - 1))]
        vol[d] = _box_sum(np.abs(lpad - rpad), cfg.block)
        vol[d, :, :d] = INVALID_COST
    return vol


def match_dense_sad(left: np.ndarray, right: np.ndarray,
                    cfg: MatchConfig) -> np.ndarray:
    """Dense winner-take-all SAD disparity map."""
    _check_dims(left, right)
    vol = _sad_volume(left, right, cfg)
    return vol.argmin(axis=0).astype(np.int32)


def match_sparse(left: np.ndarray, right: np.ndarray, mask: np.ndarray,
                 cfg: MatchConfig) -> np.ndarray:
    """SAD disparities at mask pixels plus the first and last columns.

    Everything else is the -1 sentinel. Computed values agree exactly with
    match_dense_sad at the same pixels.
    """
    _check_dims(left, right)
    mask = np.asarray(mask, dtype=bool)
    if mask.shape != left.shape:
        raise ValueError("mask dimensions disagree with the images")
    compute = mask.copy()
    compute[:, 0] = True
    compute[:, -1] = True
    dense = match_dense_sad(left, right, cfg)
    out = np.full(left.shape, SENTINEL, dtype=np.int32)
    out[compute] = dense[compute]
    return out


def match_dense_ncc(left: np.ndarray, right: np.ndarray,
                    cfg: MatchConfig) -> np.ndarray:
    """Dense zero-mean NCC disparity map (correlation maximized).

    Zero-variance windows on either side score 0; invalid candidates -inf.
    """
    _check_dims(left, right)
    h, w = left.shape
    r = cfg.block // 2
    n = cfg.block * cfg.block
    rows, cols = _padded_rows_cols(h, w, r)
    lpad = left[np.ix_(rows, np.clip(cols, 0, w - 1))]
    lsum = _box_sum(lpad, cfg.block)
    lvar = np.clip(_box_sum(lpad * lpad, cfg.block) - lsum * lsum / n, 0.0, None)
    corr = np.empty((cfg.d_max + 1, h, w))
    for d in range(cfg.d_max + 1):
        rpad = right[np.ix_(rows, np.clip(cols - d, 0, w - 1))]
        rsum = _box_sum(rpad, cfg.block)
        rvar = np.clip(_box_sum(rpad * rpad, cfg.block) - rsum * rsum / n, 0.0, None)
        cov = _box_sum(lpad * rpad, cfg.block) - lsum * rsum / n
        denom = np.sqrt(lvar * rvar)
        with np.errstate(invalid="ignore", divide="ignore"):
            c = np.where(denom > 1e-12, cov / denom, 0.0)
        c[:, :d] = -math.inf
        corr[d] = c
    return corr.argmax(axis=0).astype(np.int32)


def _check_dims(left: np.ndarray, right: np.ndarray):
    if left.shape != right.shape:
        raise ValueError(f"image dimensions disagree: {left.shape} vs {right.shape}")
