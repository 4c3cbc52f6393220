"""Segment boundary detection and refinement.

Boundaries are pixels whose Moore (8-connected) neighborhood contains a
different cluster label. The raw boundary map is cleaned up with two
fixed 3x3 morphological filters (fill isolated interior zeros, remove
interior ones) and connected-component pruning of the smallest
components. Binary maps are boolean (H, W) arrays.

Image-border pixels are exempt from both morphological rules: their
neighborhoods are incomplete, and the first/last columns must stay
available as matching anchors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

_STRUCT8 = np.ones((3, 3), dtype=bool)

# 8 Moore-neighborhood offsets
_OFFSETS8 = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)]
# 4-connected offsets
_OFFSETS4 = [(-1, 0), (1, 0), (0, -1), (0, 1)]


@dataclass(frozen=True)
class ComponentLabels:
    ids: np.ndarray       # (H, W) ints, 0 = background
    n_components: int
    sizes: np.ndarray     # (n_components + 1,), sizes[0] unused


def _shifted(a: np.ndarray, dy: int, dx: int) -> np.ndarray:
    """View of `a` shifted by (dy, dx) with edge replication."""
    h, w = a.shape
    ys = np.clip(np.arange(h) + dy, 0, h - 1)
    xs = np.clip(np.arange(w) + dx, 0, w - 1)
    return a[np.ix_(ys, xs)]


def detect_boundaries(labels: np.ndarray) -> np.ndarray:
    """Mark pixels whose Moore neighborhood holds a different label.

    Out-of-image neighbors are ignored (edge replication makes them equal
    to the pixel itself, so they never trigger a boundary).
    """
    labels = np.asarray(labels)
    out = np.zeros(labels.shape, dtype=bool)
    for dy, dx in _OFFSETS8:
        out |= _shifted(labels, dy, dx) != labels
    return out


def _interior_all_ones(bits: np.ndarray, offsets) -> np.ndarray:
    """Interior-sized mask: all listed neighbors are 1."""
    inner = np.ones(bits[1:-1, 1:-1].shape, dtype=bool)
    for dy, dx in offsets:
        inner &= bits[1 + dy:bits.shape[0] - 1 + dy, 1 + dx:bits.shape[1] - 1 + dx]
    return inner


def morph_fill(bits: np.ndarray) -> np.ndarray:
    """Set isolated interior 0s (all 8 neighbors 1) to 1. Border exempt."""
    bits = np.asarray(bits, dtype=bool)
    out = bits.copy()
    if min(bits.shape) < 3:
        return out
    flip = ~bits[1:-1, 1:-1] & _interior_all_ones(bits, _OFFSETS8)
    out[1:-1, 1:-1] |= flip
    return out


def morph_remove(bits: np.ndarray) -> np.ndarray:
    """Clear interior 1s (all four 4-neighbors 1). Border exempt."""
    bits = np.asarray(bits, dtype=bool)
    out = bits.copy()
    if min(bits.shape) < 3:
        return out
    flip = bits[1:-1, 1:-1] & _interior_all_ones(bits, _OFFSETS4)
    out[1:-1, 1:-1] &= ~flip
    return out


def label_components(bits: np.ndarray) -> ComponentLabels:
    """8-connected component labeling; ids 1..n, background 0."""
    bits = np.asarray(bits, dtype=bool)
    ids, n = ndimage.label(bits, structure=_STRUCT8)
    sizes = np.bincount(ids.ravel(), minlength=n + 1)
    sizes[0] = 0
    return ComponentLabels(ids=ids, n_components=int(n), sizes=sizes)


def prune_components(bits: np.ndarray, fraction: float = 0.04) -> np.ndarray:
    """Drop the smallest components within a removed-pixel budget.

    Components are taken smallest-first (ties toward the lower id) and
    removed greedily while the cumulative removed pixel count stays within
    fraction * total foreground pixels.
    """
    if not 0.0 < fraction < 1.0:
        raise ValueError("fraction must lie in (0, 1)")
    comp = label_components(bits)
    total = int(comp.sizes.sum())
    budget = fraction * total
    order = sorted(range(1, comp.n_components + 1),
                   key=lambda i: (comp.sizes[i], i))
    removed = 0
    drop = np.zeros(comp.n_components + 1, dtype=bool)
    for cid in order:
        if removed + comp.sizes[cid] > budget:
            break
        removed += int(comp.sizes[cid])
        drop[cid] = True
    out = np.asarray(bits, dtype=bool).copy()
    out[drop[comp.ids]] = False
    return out
