"""Command-line front end: pipeline runs, baselines, evaluation, dataset fetch."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields, replace
from pathlib import Path

import numpy as np

from sparsestereo import datasets, netpbm
from sparsestereo.evaluate import EvalConfig, bad_pixel_rate
from sparsestereo.pipeline import PRESETS, PipelineConfig, run_baseline, run_pipeline

# choices recorded so a published-number comparison can be reproduced
_NOTES = {
    "dataset_convention": "middlebury2001-native",
    "kmeans_init": "even-spread-deterministic",
    "peek_update_order": "in-place-raster",
    "prune_rule": "cumulative-budget-smallest-first",
}

_CONFIG_FIELDS = {f.name for f in fields(PipelineConfig)}

# CLI flag name -> config field
_FLAG_FIELDS = {
    "k": "k",
    "block": "block",
    "peek_window": "peek_window",
    "d_max": "d_max",
    "n_bins": "n_bins",
    "prune_fraction": "prune_fraction",
    "gt_scale": "gt_scale",
    "delta": "delta_d",
    "border": "border",
}


def _add_run_flags(p: argparse.ArgumentParser):
    p.add_argument("--left", required=True, help="left image (PPM)")
    p.add_argument("--right", required=True, help="right image (PPM)")
    p.add_argument("--gt", help="ground-truth disparity image (PGM)")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--preset", choices=sorted(PRESETS), help="parameter preset")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--k", type=int)
    p.add_argument("--block", type=int)
    p.add_argument("--peek-window", type=int, dest="peek_window")
    p.add_argument("--d-max", type=int, dest="d_max")
    p.add_argument("--n-bins", type=int, dest="n_bins")
    p.add_argument("--prune-fraction", type=float, dest="prune_fraction")
    p.add_argument("--gt-scale", type=int, dest="gt_scale")
    p.add_argument("--delta", type=float)
    p.add_argument("--border", type=int)
    p.add_argument("--dump-intermediates", action="store_true")
    p.add_argument("--no-figures", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsestereo",
        description="Dense disparity maps from sparse segment-boundary estimates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the boundary-sparse pipeline")
    _add_run_flags(run)

    base = sub.add_parser("baseline", help="run a dense SAD/NCC baseline")
    _add_run_flags(base)
    base.add_argument("--method", choices=["sad", "ncc"], required=True)

    ev = sub.add_parser("eval", help="compare two disparity PGMs")
    ev.add_argument("--computed", required=True)
    ev.add_argument("--truth", required=True)
    ev.add_argument("--computed-scale", type=int, default=1, dest="computed_scale")
    ev.add_argument("--truth-scale", type=int, default=1, dest="truth_scale")
    ev.add_argument("--delta", type=float, default=1.0)
    ev.add_argument("--border", type=int, default=0)

    fetch = sub.add_parser("fetch-dataset", help="download the Middlebury 2001 pairs")
    fetch.add_argument("--dest", required=True)
    fetch.add_argument("--url", default=datasets.BASE_URL)
    return parser


def _parse_config_file(path: str) -> dict:
    values = {}
    for line_no, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{line_no}: expected key=value")
        key, val = (s.strip() for s in line.split("=", 1))
        if key not in _CONFIG_FIELDS:
            raise ValueError(f"{path}:{line_no}: unknown key {key!r}")
        caster = float if key in ("prune_fraction", "delta_d") else int
        values[key] = caster(val)
    return values


def _resolve_config(args) -> PipelineConfig:
    cfg = PRESETS[args.preset] if args.preset else PipelineConfig()
    if args.config:
        cfg = replace(cfg, **_parse_config_file(args.config))
    overrides = {field: getattr(args, flag)
                 for flag, field in _FLAG_FIELDS.items()
                 if getattr(args, flag) is not None}
    return replace(cfg, **overrides)


def _load_inputs(args, cfg: PipelineConfig):
    left = netpbm.read_ppm(args.left)
    right = netpbm.read_ppm(args.right)
    truth = None
    if args.gt:
        gray, _ = netpbm.read_pgm(args.gt)
        truth = netpbm.decode_ground_truth(gray, cfg.gt_scale)
    return left, right, truth


def _render_gray(arr: np.ndarray, kind: str, cfg: PipelineConfig) -> np.ndarray:
    if kind == "lightness":
        return np.rint(np.asarray(arr) * 255.0 / 100.0).astype(np.int32)
    if kind == "labels":
        k = cfg.k
        scale = 255.0 / (k - 1) if k > 1 else 0.0
        return np.rint(np.asarray(arr) * scale).astype(np.int32)
    if kind == "binary":
        return np.asarray(arr, dtype=np.int32) * 255
    if kind == "disparity":
        arr = np.asarray(arr)
        return np.where(arr < 0, 0, arr * cfg.gt_scale).astype(np.int32)
    raise ValueError(kind)


def _dump_intermediates(result, out_dir: Path, cfg: PipelineConfig):
    inter = out_dir / "intermediates"
    inter.mkdir(parents=True, exist_ok=True)
    stages = [
        ("lightness_left", result.lightness_left, "lightness"),
        ("lightness_right", result.lightness_right, "lightness"),
        ("labels", result.label_map, "labels"),
        ("boundary_raw", result.boundary_raw, "binary"),
        ("boundary_filled", result.boundary_filled, "binary"),
        ("boundary_removed", result.boundary_removed, "binary"),
        ("boundary_pruned", result.boundary_pruned, "binary"),
        ("sparse", result.sparse, "disparity"),
        ("propagated", result.propagated, "disparity"),
    ]
    for name, arr, kind in stages:
        if arr is not None:
            netpbm.write_pgm(inter / f"{name}.pgm", _render_gray(arr, kind, cfg))


def _write_report(result, out_dir: Path, cfg: PipelineConfig):
    report = {"method": result.method_name}
    report.update(cfg.as_dict())
    report.update(_NOTES)
    if result.eval_report is not None:
        report["bad_percent"] = result.eval_report.bad_percent
        report["n_evaluated"] = result.eval_report.n_evaluated
        report["n_bad"] = result.eval_report.n_bad
    if result.sparsity is not None:
        report.update(result.sparsity.to_dict())
    (out_dir / "report.json").write_text(json.dumps(report, sort_keys=True, indent=2) + "\n")
    lines = "".join(f"{k}={report[k]}\n" for k in sorted(report))
    (out_dir / "report.txt").write_text(lines)
    return report


def _cmd_run_or_baseline(args) -> int:
    cfg = _resolve_config(args)
    left, right, truth = _load_inputs(args, cfg)
    if args.command == "baseline":
        result = run_baseline(left, right, truth, cfg, f"dense-{args.method}")
    else:
        result = run_pipeline(left, right, truth, cfg)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    netpbm.write_pgm(out_dir / "disparity.pgm",
                     netpbm.encode_disparity(result.disparity, cfg.gt_scale))
    if args.dump_intermediates:
        _dump_intermediates(result, out_dir, cfg)
    report = _write_report(result, out_dir, cfg)
    if not args.no_figures:
        from sparsestereo import figures
        figures.render_overview(result, truth, out_dir / "overview.png")
        if args.dump_intermediates:
            figures.render_stages(result, out_dir / "figures")
    for key in sorted(report):
        print(f"{key}={report[key]}")
    for stage, ms in result.timings_ms.items():
        print(f"timing_ms.{stage}={ms:.1f}")
    return 0


def _cmd_eval(args) -> int:
    comp_gray, _ = netpbm.read_pgm(args.computed)
    truth_gray, _ = netpbm.read_pgm(args.truth)
    computed = netpbm.decode_ground_truth(comp_gray, args.computed_scale)
    truth = netpbm.decode_ground_truth(truth_gray, args.truth_scale)
    report = bad_pixel_rate(computed, truth,
                            EvalConfig(delta_d=args.delta, border=args.border),
                            method_name="eval")
    sys.stdout.write(report.to_text())
    return 0


def _cmd_fetch(args) -> int:
    paths = datasets.fetch(args.dest, base_url=args.url)
    for p in paths:
        print(p)
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "run": _cmd_run_or_baseline,
        "baseline": _cmd_run_or_baseline,
        "eval": _cmd_eval,
        "fetch-dataset": _cmd_fetch,
    }
    try:
        return handlers[args.command](args)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
