"""Middlebury 2001 stereo pair acquisition and loading.

The three evaluation pairs (tsukuba, sawtooth, venus) are mirrored into a
local directory keeping the upstream relative paths. Every downloaded
file is verified by decoding it; fetching is idempotent and removes
partially written files on failure.
"""

from __future__ import annotations

import urllib.request
from pathlib import Path

import numpy as np

from sparsestereo import netpbm

BASE_URL = "https://vision.middlebury.edu/stereo/data/scenes2001/data"

DATASETS = {
    "tsukuba": {
        "left": "tsukuba/scene1.row3.col3.ppm",
        "right": "tsukuba/scene1.row3.col4.ppm",
        "gt": "tsukuba/truedisp.row3.col3.pgm",
    },
    "sawtooth": {
        "left": "sawtooth/im2.ppm",
        "right": "sawtooth/im6.ppm",
        "gt": "sawtooth/disp2.pgm",
    },
    "venus": {
        "left": "venus/im2.ppm",
        "right": "venus/im6.ppm",
        "gt": "venus/disp2.pgm",
    },
}


def _verify(path: Path) -> None:
    if path.suffix == ".ppm":
        netpbm.read_ppm(path)
    else:
        netpbm.read_pgm(path)


def is_complete(dest) -> bool:
    dest = Path(dest)
    return all((dest / rel).exists()
               for files in DATASETS.values() for rel in files.values())


def fetch(dest, base_url: str = BASE_URL, timeout: float = 60.0) -> list[Path]:
    """Download any missing dataset files into `dest`. Returns all paths."""
    dest = Path(dest)
    paths = []
    for files in DATASETS.values():
        for rel in files.values():
            target = dest / rel
            paths.append(target)
            if target.exists():
                continue
            target.parent.mkdir(parents=True, exist_ok=True)
            url = f"{base_url}/{rel}"
            try:
                with urllib.request.urlopen(url, timeout=timeout) as resp:
                    target.write_bytes(resp.read())
                _verify(target)
            except Exception:
                target.unlink(missing_ok=True)
                raise
    return paths


def load_pair(dest, name: str, gt_scale: int):
    """Load (left RGB, right RGB, ground-truth disparity) for one pair."""
    files = DATASETS[name]
    dest = Path(dest)
    left = netpbm.read_ppm(dest / files["left"])
    right = netpbm.read_ppm(dest / files["right"])
    gt_gray, _ = netpbm.read_pgm(dest / files["gt"])
    truth = netpbm.decode_ground_truth(gt_gray, gt_scale)
    return left, right, truth
