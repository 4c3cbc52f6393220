"""Dense disparity reconstruction from sparse boundary measurements.

Two stages. Stage one propagates disparities along each scan line:
between two consecutive known pixels carrying the same disparity the gap
is filled with that value, and the stretches before the first / after the
last known pixel take the nearest border column's disparity. Stage two
walks the map in raster order and sets each remaining unknown cell to the
statistical mode of the known values in its square neighborhood; cells
filled earlier in the scan are visible to later ones, which guarantees a
single pass suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

SENTINEL = -1


@dataclass(frozen=True)
class PeekConfig:
    window: int = 5  # odd square neighborhood side

    def __post_init__(self):
        if self.window < 3 or self.window % 2 == 0:
            raise ValueError("window must be an odd integer >= 3")


def propagate_rows(disp: np.ndarray) -> np.ndarray:
    """Scan-line propagation; rows are independent.

    Gaps between known pixels with unequal disparities are left at -1.
    Requires known first and last columns in every row.
    """
    disp = np.asarray(disp)
    if (disp[:, 0] == SENTINEL).any() or (disp[:, -1] == SENTINEL).any():
        raise ValueError("first and last columns must hold known disparities")
    out = disp.copy()
    n_cols = out.shape[1]
    for row in out:
        prev_disp = SENTINEL
        prev_idx = 1
        for j in range(1, n_cols - 1):
            if row[j] > SENTINEL:
                if prev_disp > SENTINEL:
                    if row[j] == prev_disp:
                        row[prev_idx:j] = prev_disp
                else:
                    row[prev_idx:j] = row[0]
                prev_disp = row[j]
                prev_idx = j + 1
        row[prev_idx:n_cols - 1] = row[n_cols - 1]
    return out


def peek_fill(disp: np.ndarray, cfg: PeekConfig = PeekConfig()) -> np.ndarray:
    """Mode-of-neighbors fill of every remaining unknown cell, in place
    over a single raster scan. Ties break toward the smallest disparity.
    """
    out = np.asarray(disp).copy()
    h, w = out.shape
    r = cfg.window // 2
    ys, xs = np.nonzero(out == SENTINEL)  # raster order
    for y, x in zip(ys, xs):
        win = out[max(0, y - r):y + r + 1, max(0, x - r):x + r + 1]
        known = win[win > SENTINEL]
        if known.size == 0:
            raise RuntimeError(f"no known disparity near ({x}, {y})")
        out[y, x] = np.bincount(known).argmax()
    return out
