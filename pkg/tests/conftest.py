import os
from pathlib import Path

import numpy as np
import pytest

from sparsestereo import datasets

DATA_ENV = "SPARSESTEREO_DATA"


def stripe_texture(h, w, rng, noise=12):
    """Vertical stripes of random lightness plus per-pixel noise.

    The stripes give the segmenter dense vertical boundaries; the noise
    makes every matching window unique.
    """
    tex = np.zeros((h, w, 3))
    x = 0
    while x < w:
        wd = int(rng.integers(5, 12))
        tex[:, x:x + wd] = rng.uniform(30, 220)
        x += wd
    tex += rng.uniform(-noise, noise, size=(h, w, 3))
    return np.clip(tex, 0, 255).astype(np.uint8)


def shifted_pair(h, w, shift, seed=0, gen=stripe_texture):
    """Textured left image and right = left shifted by `shift` columns.

    Both are crops of one wider texture, so true disparity is exactly
    `shift` everywhere.
    """
    rng = np.random.default_rng(seed)
    tex = gen(h, w + shift, rng)
    return tex[:, :w].copy(), tex[:, shift:w + shift].copy()


def clamp_shifted_pair(h, w, shift, seed=0, gen=stripe_texture):
    """Right = left shifted by `shift` columns with edge replication.

    Unlike the crop construction, the matchers' clamp-to-edge padding sees
    consistent texture at the right border, so the true disparity has
    exactly zero cost at every pixel with x >= shift.
    """
    rng = np.random.default_rng(seed)
    left = gen(h, w, rng)
    cols = np.minimum(np.arange(w) + shift, w - 1)
    return left, left[:, cols].copy()


def random_binary(rng, max_side=14, p=None):
    h = int(rng.integers(1, max_side))
    w = int(rng.integers(1, max_side))
    if p is None:
        p = rng.uniform(0.1, 0.9)
    return rng.random((h, w)) < p


@pytest.fixture(scope="session")
def middlebury_dir():
    """Local Middlebury 2001 copy; tries to fetch it, skips when offline."""
    dest = Path(os.environ.get(DATA_ENV, Path(__file__).parent.parent / "data" / "middlebury2001"))
    if not datasets.is_complete(dest):
        try:
            datasets.fetch(dest)
        except Exception as exc:
            pytest.skip(f"Middlebury 2001 dataset unavailable (no network and no "
                        f"local copy at {dest}; set ${DATA_ENV}): {exc}")
    return dest
