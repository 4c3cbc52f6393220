"""End-to-end orchestration of the boundary-sparse disparity pipeline.

Stage order: lightness conversion of both images, histogram K-Means
segmentation of the left image, boundary detection, fill/remove
morphology, component pruning, sparse SAD matching, scan-line
propagation, mode-of-neighbors fill, then evaluation and sparsity
statistics. Every intermediate is retained on the result.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

import numpy as np

from sparsestereo import boundary, segmentation
from sparsestereo.colorspace import rgb_to_lightness
from sparsestereo.evaluate import EvalConfig, EvalReport, SparsityReport, bad_pixel_rate, sparsity_stats
from sparsestereo.matching import MatchConfig, match_dense_ncc, match_dense_sad, match_sparse
from sparsestereo.reconstruct import PeekConfig, peek_fill, propagate_rows


@dataclass(frozen=True)
class PipelineConfig:
    k: int = 10
    block: int = 7
    peek_window: int = 5
    d_max: int = 15
    n_bins: int = 256
    prune_fraction: float = 0.04
    gt_scale: int = 16
    delta_d: float = 1.0
    border: int = 0

    def match_config(self) -> MatchConfig:
        return MatchConfig(block=self.block, d_max=self.d_max)

    def peek_config(self) -> PeekConfig:
        return PeekConfig(window=self.peek_window)

    def eval_config(self) -> EvalConfig:
        return EvalConfig(delta_d=self.delta_d, border=self.border)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "block": self.block,
            "peek_window": self.peek_window,
            "d_max": self.d_max,
            "n_bins": self.n_bins,
            "prune_fraction": self.prune_fraction,
            "gt_scale": self.gt_scale,
            "delta_d": self.delta_d,
            "border": self.border,
        }


# per-dataset presets (Middlebury 2001 conventions for gt_scale / d_max)
PRESETS: dict[str, PipelineConfig] = {
    "tsukuba": PipelineConfig(k=10, block=7, peek_window=5, d_max=15, gt_scale=16),
    "sawtooth": PipelineConfig(k=12, block=9, peek_window=5, d_max=19, gt_scale=8),
    "venus": PipelineConfig(k=10, block=9, peek_window=5, d_max=19, gt_scale=8),
}


@dataclass
class PipelineResult:
    disparity: np.ndarray
    method_name: str
    config: PipelineConfig
    lightness_left: np.ndarray | None = None
    lightness_right: np.ndarray | None = None
    label_map: np.ndarray | None = None
    boundary_raw: np.ndarray | None = None
    boundary_filled: np.ndarray | None = None
    boundary_removed: np.ndarray | None = None
    boundary_pruned: np.ndarray | None = None
    sparse: np.ndarray | None = None
    propagated: np.ndarray | None = None
    eval_report: EvalReport | None = None
    sparsity: SparsityReport | None = None
    timings_ms: dict = field(default_factory=dict)


class _StageTimer:
    def __init__(self):
        self.timings: dict[str, float] = {}

    def run(self, name, fn, *args, **kwargs):
        t0 = time.perf_counter()
        try:
            out = fn(*args, **kwargs)
        except Exception as exc:
            raise RuntimeError(f"pipeline stage '{name}' failed: {exc}") from exc
        self.timings[name] = (time.perf_counter() - t0) * 1000.0
        return out


def run_pipeline(left: np.ndarray, right: np.ndarray,
                 truth: np.ndarray | None, cfg: PipelineConfig) -> PipelineResult:
    """Full boundary-sparse pipeline on a rectified RGB pair."""
    if left.shape != right.shape:
        raise ValueError("left/right dimensions disagree")
    t = _StageTimer()
    l_light = t.run("lightness_left", rgb_to_lightness, left)
    r_light = t.run("lightness_right", rgb_to_lightness, right)
    hist = t.run("histogram", segmentation.build_histogram, l_light, cfg.n_bins)
    model = t.run("kmeans", segmentation.kmeans_histogram, hist, cfg.k)
    labels = t.run("labels", segmentation.assign_labels, l_light, hist, model)
    raw = t.run("boundaries", boundary.detect_boundaries, labels)
    filled = t.run("morph_fill", boundary.morph_fill, raw)
    removed = t.run("morph_remove", boundary.morph_remove, filled)
    pruned = t.run("prune", boundary.prune_components, removed, cfg.prune_fraction)
    sparse = t.run("match_sparse", match_sparse, l_light, r_light, pruned,
                   cfg.match_config())
    propagated = t.run("propagate", propagate_rows, sparse)
    dense = t.run("peek_fill", peek_fill, propagated, cfg.peek_config())
    sparsity = t.run("sparsity", sparsity_stats, raw, pruned)
    report = None
    if truth is not None:
        report = t.run("eval", bad_pixel_rate, dense, truth, cfg.eval_config(),
                       "proposed", cfg.as_dict())
    return PipelineResult(
        disparity=dense, method_name="proposed", config=cfg,
        lightness_left=l_light, lightness_right=r_light, label_map=labels,
        boundary_raw=raw, boundary_filled=filled, boundary_removed=removed,
        boundary_pruned=pruned, sparse=sparse, propagated=propagated,
        eval_report=report, sparsity=sparsity, timings_ms=t.timings,
    )


def run_baseline(left: np.ndarray, right: np.ndarray,
                 truth: np.ndarray | None, cfg: PipelineConfig,
                 which: str) -> PipelineResult:
    """Dense SAD or NCC baseline with the same evaluation path."""
    if left.shape != right.shape:
        raise ValueError("left/right dimensions disagree")
    matchers = {"dense-sad": match_dense_sad, "dense-ncc": match_dense_ncc}
    if which not in matchers:
        raise ValueError(f"unknown baseline {which!r}; expected one of {sorted(matchers)}")
    t = _StageTimer()
    l_light = t.run("lightness_left", rgb_to_lightness, left)
    r_light = t.run("lightness_right", rgb_to_lightness, right)
    dense = t.run("match", matchers[which], l_light, r_light, cfg.match_config())
    report = None
    if truth is not None:
        report = t.run("eval", bad_pixel_rate, dense, truth, cfg.eval_config(),
                       which, cfg.as_dict())
    return PipelineResult(
        disparity=dense, method_name=which, config=cfg,
        lightness_left=l_light, lightness_right=r_light,
        eval_report=report, timings_ms=t.timings,
    )


def preset(name: str, **overrides) -> PipelineConfig:
    """Named preset with optional field overrides."""
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; expected one of {sorted(PRESETS)}")
    return replace(PRESETS[name], **overrides)
