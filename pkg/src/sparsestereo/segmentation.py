"""Histogram-accelerated K-Means over lightness values.

Clustering runs on the occupied bins of an L-value histogram (weight =
bin count) instead of on the raw pixels, so each Lloyd iteration touches
at most n_bins items. Pixels inherit the cluster of their bin.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

L_RANGE = 100.0  # CIELAB L spans [0, 100]


@dataclass(frozen=True)
class Histogram:
    bin_edges: np.ndarray  # (n_bins + 1,) over [0, 100]
    counts: np.ndarray     # (n_bins,) nonnegative ints

    @property
    def n_bins(self) -> int:
        return len(self.counts)

    @property
    def bin_centers(self) -> np.ndarray:
        return (self.bin_edges[:-1] + self.bin_edges[1:]) / 2.0


@dataclass(frozen=True)
class ClusterModel:
    centroids: np.ndarray       # (k,) sorted ascending, in L units
    bin_assignment: np.ndarray  # (n_bins,) cluster index per bin

    @property
    def k(self) -> int:
        return len(self.centroids)


def bin_indices(values: np.ndarray, n_bins: int) -> np.ndarray:
    """Uniform binning over [0, 100]: floor(L / 100 * n_bins), L=100 clamped."""
    idx = np.floor(np.asarray(values) / L_RANGE * n_bins).astype(np.int64)
    return np.clip(idx, 0, n_bins - 1)


def build_histogram(lightness: np.ndarray, n_bins: int = 256) -> Histogram:
    if n_bins < 2:
        raise ValueError("n_bins must be at least 2")
    idx = bin_indices(lightness, n_bins)
    counts = np.bincount(idx.ravel(), minlength=n_bins)
    edges = np.linspace(0.0, L_RANGE, n_bins + 1)
    return Histogram(bin_edges=edges, counts=counts)


def _nearest(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    # argmin breaks ties toward the lower centroid index
    return np.abs(points[:, None] - centroids[None, :]).argmin(axis=1)


def kmeans_histogram(hist: Histogram, k: int, max_iter: int = 100,
                     tol: float = 1e-6) -> ClusterModel:
    """Weighted Lloyd iterations over occupied bin centers.

    Initialization is deterministic: k centroids evenly spaced between the
    smallest and largest occupied bin centers. An emptied cluster is
    re-seeded at the occupied bin center farthest from its assigned
    centroid. Returned centroids are sorted ascending.
    """
    occupied = hist.counts > 0
    n_occ = int(occupied.sum())
    if k < 1:
        raise ValueError("k must be positive")
    if k > n_occ:
        raise ValueError(f"k={k} exceeds the {n_occ} occupied bins")

    centers = hist.bin_centers[occupied]
    weights = hist.counts[occupied].astype(np.float64)
    centroids = np.linspace(centers[0], centers[-1], k)

    for _ in range(max_iter):
        assign = _nearest(centers, centroids)
        new = centroids.copy()
        taken = set()
        for j in range(k):
            sel = assign == j
            if sel.any():
                new[j] = np.average(centers[sel], weights=weights[sel])
            else:
                # re-seed at the occupied center farthest from its centroid
                dist = np.abs(centers - centroids[assign])
                for idx in np.argsort(-dist):
                    if idx not in taken:
                        taken.add(int(idx))
                        new[j] = centers[idx]
                        break
        move = np.abs(new - centroids).max()
        centroids = new
        if move < tol:
            break

    order = np.argsort(centroids, kind="stable")
    centroids = centroids[order]
    bin_assignment = _nearest(hist.bin_centers, centroids)
    return ClusterModel(centroids=centroids, bin_assignment=bin_assignment)


def assign_labels(lightness: np.ndarray, hist: Histogram,
                  model: ClusterModel) -> np.ndarray:
    """Per-pixel cluster labels: each pixel takes its bin's cluster."""
    if int(hist.counts.sum()) != lightness.size:
        raise ValueError("histogram does not match the lightness map")
    idx = bin_indices(lightness, hist.n_bins)
    return model.bin_assignment[idx].astype(np.int32)
