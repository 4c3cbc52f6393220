"""Netpbm (PPM/PGM) readers and writers plus ground-truth disparity codecs.

Images are plain numpy arrays: RGB rasters are uint8 of shape (H, W, 3),
grayscale rasters are returned together with their maxval, disparity maps
are int32 with -1 marking "not yet determined".
"""

from __future__ import annotations

from pathlib import Path

import numpy as np


class NetpbmError(ValueError):
    """Malformed Netpbm file (bad magic, header, or payload)."""


class _Tokens:
    """Whitespace/comment-aware token scanner over the raw file bytes."""

    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def next(self) -> bytes:
        d, n = self.data, len(self.data)
        i = self.pos
        while i < n:
            c = d[i:i + 1]
            if c == b"#":
                while i < n and d[i:i + 1] not in (b"\n", b"\r"):
                    i += 1
            elif c.isspace():
                i += 1
            else:
                break
        if i >= n:
            raise NetpbmError("unexpected end of file in header")
        j = i
        while j < n and not d[j:j + 1].isspace() and d[j:j + 1] != b"#":
            j += 1
        self.pos = j
        return d[i:j]

    def next_int(self, what: str) -> int:
        tok = self.next()
        try:
            return int(tok)
        except ValueError:
            raise NetpbmError(f"invalid {what} token {tok!r}") from None

    def skip_single_whitespace(self):
        # exactly one whitespace byte separates maxval from binary payload
        if self.pos >= len(self.data) or not self.data[self.pos:self.pos + 1].isspace():
            raise NetpbmError("missing whitespace after maxval")
        self.pos += 1


def _read_header(data: bytes, magics: tuple[bytes, ...]):
    toks = _Tokens(data)
    magic = toks.next()
    if magic not in magics:
        raise NetpbmError(f"unsupported magic {magic!r}, expected one of {magics}")
    width = toks.next_int("width")
    height = toks.next_int("height")
    maxval = toks.next_int("maxval")
    if width <= 0 or height <= 0:
        raise NetpbmError(f"non-positive dimensions {width}x{height}")
    if maxval <= 0 or maxval > 65535:
        raise NetpbmError(f"maxval {maxval} out of range")
    return toks, magic, width, height, maxval


def _read_ascii_samples(toks: _Tokens, count: int, maxval: int) -> np.ndarray:
    out = np.empty(count, dtype=np.int64)
    for i in range(count):
        try:
            out[i] = toks.next_int("sample")
        except NetpbmError:
            raise NetpbmError("truncated ASCII payload") from None
    if out.min() < 0 or out.max() > maxval:
        raise NetpbmError("sample out of [0, maxval] range")
    return out


def _read_binary_samples(toks: _Tokens, count: int, maxval: int) -> np.ndarray:
    toks.skip_single_whitespace()
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype(np.uint8)
    payload = toks.data[toks.pos:toks.pos + count * dtype.itemsize]
    if len(payload) < count * dtype.itemsize:
        raise NetpbmError("truncated binary payload")
    out = np.frombuffer(payload, dtype=dtype).astype(np.int64)
    if out.max(initial=0) > maxval:
        raise NetpbmError("sample exceeds maxval")
    return out


def read_ppm(path) -> np.ndarray:
    """Decode a P3/P6 PPM with maxval 255 into a uint8 (H, W, 3) array."""
    data = Path(path).read_bytes()
    toks, magic, width, height, maxval = _read_header(data, (b"P3", b"P6"))
    if maxval != 255:
        raise NetpbmError(f"PPM maxval must be 255, got {maxval}")
    count = width * height * 3
    if magic == b"P3":
        flat = _read_ascii_samples(toks, count, maxval)
    else:
        flat = _read_binary_samples(toks, count, maxval)
    return flat.reshape(height, width, 3).astype(np.uint8)


def read_pgm(path) -> tuple[np.ndarray, int]:
    """Decode a P2/P5 PGM. Returns (pixels, maxval); pixels are (H, W) int32."""
    data = Path(path).read_bytes()
    toks, magic, width, height, maxval = _read_header(data, (b"P2", b"P5"))
    count = width * height
    if magic == b"P2":
        flat = _read_ascii_samples(toks, count, maxval)
    else:
        flat = _read_binary_samples(toks, count, maxval)
    return flat.reshape(height, width).astype(np.int32), maxval


def write_ppm(path, rgb: np.ndarray) -> None:
    """Write a uint8 (H, W, 3) array as binary P6 with maxval 255."""
    rgb = np.asarray(rgb)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise ValueError("rgb must have shape (H, W, 3)")
    h, w = rgb.shape[:2]
    header = f"P6\n{w} {h}\n255\n".encode()
    Path(path).write_bytes(header + rgb.astype(np.uint8).tobytes())


def write_pgm(path, gray: np.ndarray) -> None:
    """Write a (H, W) array with samples in [0, 255] as binary P5, maxval 255."""
    gray = np.asarray(gray)
    if gray.ndim != 2:
        raise ValueError("gray must have shape (H, W)")
    if gray.min(initial=0) < 0 or gray.max(initial=0) > 255:
        raise ValueError("samples must lie in [0, 255]")
    h, w = gray.shape
    header = f"P5\n{w} {h}\n255\n".encode()
    Path(path).write_bytes(header + gray.astype(np.uint8).tobytes())


def decode_ground_truth(gray: np.ndarray, scale: int) -> np.ndarray:
    """Convert ground-truth gray samples to disparities: round(sample / scale).

    Zero samples stay zero; downstream evaluation treats them as "unknown".
    """
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    gray = np.asarray(gray)
    return np.rint(gray / scale).astype(np.int32)


def encode_disparity(disp: np.ndarray, scale: int) -> np.ndarray:
    """Render a dense disparity map as gray samples value * scale (maxval 255)."""
    if scale < 1:
        raise ValueError("scale must be a positive integer")
    disp = np.asarray(disp)
    if (disp < 0).any():
        raise ValueError("disparity map must be dense (no -1 sentinels)")
    out = disp.astype(np.int64) * scale
    if out.max(initial=0) > 255:
        raise ValueError("encoded samples would exceed 255")
    return out.astype(np.int32)
