"""sRGB to CIELAB lightness conversion.

Only the L channel is kept: it is the single matching feature for the
whole pipeline. Constants follow sRGB primaries with the D65 white point.
"""

from __future__ import annotations

import numpy as np

# Y row of the sRGB -> XYZ (D65) matrix
_Y_WEIGHTS = np.array([0.2126729, 0.7151522, 0.0721750])

_DELTA = 6.0 / 29.0


def rgb_to_lightness(rgb: np.ndarray) -> np.ndarray:
    """Per-pixel CIELAB L in [0, 100] from a uint8 (H, W, 3) raster."""
    c = np.asarray(rgb, dtype=np.float64) / 255.0
    linear = np.where(c <= 0.04045, c / 12.92, ((c + 0.055) / 1.055) ** 2.4)
    y = linear @ _Y_WEIGHTS  # relative luminance, Yn = 1
    f = np.where(y > _DELTA ** 3, np.cbrt(y), y / (3.0 * _DELTA ** 2) + 4.0 / 29.0)
    return np.clip(116.0 * f - 16.0, 0.0, 100.0)
