"""Bad-matching-pixel evaluation and pipeline sparsity statistics.

The error metric is the percentage of evaluated pixels whose computed
disparity differs from ground truth by more than a tolerance. Ground
truth zeros mark regions that are not compared; an optional border strip
can be excluded as well.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class EvalConfig:
    delta_d: float = 1.0  # disparity error tolerance
    border: int = 0       # pixels excluded on every image side

    def __post_init__(self):
        if self.delta_d <= 0:
            raise ValueError("delta_d must be positive")
        if self.border < 0:
            raise ValueError("border must be nonnegative")


@dataclass(frozen=True)
class EvalReport:
    bad_percent: float
    n_evaluated: int
    n_bad: int
    method_name: str = ""
    parameters: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "method": self.method_name,
            "bad_percent": self.bad_percent,
            "n_evaluated": self.n_evaluated,
            "n_bad": self.n_bad,
        }
        out.update(self.parameters)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        return "\n".join(f"{k}={v}" for k, v in self.to_dict().items()) + "\n"


@dataclass(frozen=True)
class SparsityReport:
    raw_boundary_count: int
    refined_boundary_count: int
    computed_pixel_count: int
    refined_fraction_of_image: float
    computed_fraction_of_image: float
    reduction_percent: float

    def to_dict(self) -> dict:
        return {
            "raw_boundary_count": self.raw_boundary_count,
            "refined_boundary_count": self.refined_boundary_count,
            "computed_pixel_count": self.computed_pixel_count,
            "refined_fraction_of_image": self.refined_fraction_of_image,
            "computed_fraction_of_image": self.computed_fraction_of_image,
            "reduction_percent": self.reduction_percent,
        }


def bad_pixel_rate(computed: np.ndarray, truth: np.ndarray,
                   cfg: EvalConfig = EvalConfig(), method_name: str = "",
                   parameters: dict | None = None) -> EvalReport:
    """Percentage of evaluated pixels with |computed - truth| > delta_d.

    Evaluated pixels are those with truth > 0 at least `border` pixels
    from every edge.
    """
    computed = np.asarray(computed)
    truth = np.asarray(truth)
    if computed.shape != truth.shape:
        raise ValueError("computed and truth dimensions disagree")
    mask = truth > 0
    b = cfg.border
    if b > 0:
        edge = np.zeros_like(mask)
        edge[b:mask.shape[0] - b, b:mask.shape[1] - b] = True
        mask &= edge
    n_eval = int(mask.sum())
    if n_eval == 0:
        raise ValueError("evaluated pixel set is empty")
    n_bad = int((np.abs(computed - truth)[mask] > cfg.delta_d).sum())
    return EvalReport(
        bad_percent=100.0 * n_bad / n_eval,
        n_evaluated=n_eval,
        n_bad=n_bad,
        method_name=method_name,
        parameters=dict(parameters or {}),
    )


def sparsity_stats(raw: np.ndarray, refined: np.ndarray) -> SparsityReport:
    """Boundary-refinement and computed-pixel statistics."""
    raw = np.asarray(raw, dtype=bool)
    refined = np.asarray(refined, dtype=bool)
    if raw.shape != refined.shape:
        raise ValueError("boundary map dimensions disagree")
    h, w = raw.shape
    n_raw = int(raw.sum())
    n_refined = int(refined.sum())
    # border columns are always computed; don't double-count overlap
    overlap = int(refined[:, 0].sum() + refined[:, -1].sum())
    computed = n_refined + 2 * h - overlap
    reduction = 100.0 * (n_raw - n_refined) / n_raw if n_raw else 0.0
    return SparsityReport(
        raw_boundary_count=n_raw,
        refined_boundary_count=n_refined,
        computed_pixel_count=computed,
        refined_fraction_of_image=n_refined / (h * w),
        computed_fraction_of_image=computed / (h * w),
        reduction_percent=reduction,
    )
