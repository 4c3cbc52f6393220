"""Stereo disparity estimation from sparse segment-boundary measurements.

The pipeline segments the left image's lightness values with a
histogram-accelerated K-Means, refines the segment boundaries with
morphological filtering and connected-component pruning, measures SAD
disparities only at the surviving boundary pixels, and reconstructs the
dense disparity map by scan-line propagation followed by mode-of-neighbors
estimation. Dense SAD and NCC block matchers are included as baselines,
along with a bad-matching-pixel evaluator.
"""

from sparsestereo.pipeline import PipelineConfig, PipelineResult, run_pipeline, run_baseline, PRESETS

__all__ = [
    "PipelineConfig",
    "PipelineResult",
    "run_pipeline",
    "run_baseline",
    "PRESETS",
]
