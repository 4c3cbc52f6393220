"""Matplotlib rendering of pipeline results for the report output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def _show(ax, img, title, cmap="gray", vmax=None):
    ax.imshow(img, cmap=cmap, vmin=0, vmax=vmax, interpolation="nearest")
    ax.set_title(title, fontsize=9)
    ax.set_axis_off()


def render_overview(result, truth, path) -> Path:
    """One summary figure: input, key intermediates, result vs ground truth."""
    panels = [("left image", result.lightness_left if result.lightness_left is not None
               else result.disparity, 100)]
    if result.label_map is not None:
        panels.append(("segmentation", result.label_map, None))
    if result.boundary_pruned is not None:
        panels.append(("refined boundaries", result.boundary_pruned, 1))
    panels.append(("disparity", result.disparity, result.config.d_max))
    if truth is not None:
        panels.append(("ground truth", truth, result.config.d_max))

    cols = len(panels)
    fig, axes = plt.subplots(1, cols, figsize=(3.0 * cols, 3.0))
    if cols == 1:
        axes = [axes]
    for ax, (title, img, vmax) in zip(axes, panels):
        _show(ax, np.asarray(img), title, vmax=vmax)
    fig.suptitle(result.method_name, fontsize=11)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_stages(result, out_dir) -> list[Path]:
    """One figure per retained intermediate stage."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stages = [
        ("lightness_left", result.lightness_left, 100),
        ("lightness_right", result.lightness_right, 100),
        ("labels", result.label_map, None),
        ("boundary_raw", result.boundary_raw, 1),
        ("boundary_filled", result.boundary_filled, 1),
        ("boundary_removed", result.boundary_removed, 1),
        ("boundary_pruned", result.boundary_pruned, 1),
        ("sparse", result.sparse, result.config.d_max),
        ("propagated", result.propagated, result.config.d_max),
        ("disparity", result.disparity, result.config.d_max),
    ]
    written = []
    for name, img, vmax in stages:
        if img is None:
            continue
        fig, ax = plt.subplots(figsize=(4.5, 4.0))
        _show(ax, np.asarray(img), name, vmax=vmax)
        fig.tight_layout()
        path = out_dir / f"{name}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
