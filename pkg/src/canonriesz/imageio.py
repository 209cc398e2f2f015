"""8-bit PGM/PPM and a lossless float raster format.

Float raster layout::

    b"LCRTF1\\n"
    b"<width> <height> <channels>\\n"
    width*height*channels little-endian float64, row-major, channels interleaved
"""

from __future__ import annotations

import os
import warnings
from pathlib import Path

import numpy as np

from .errors import (
    ChannelMismatch,
    CorruptHeader,
    IoFailure,
    NotNormalized,
    PayloadTruncated,
    UnsupportedFormat,
)

FLOAT_MAGIC = b"LCRTF1\n"
RANGE_SLACK = 1e-9
_FORMATS = {".pgm": "pgm", ".ppm": "ppm", ".lcrtf": "floatraster", ".frs": "floatraster"}


def _read_bytes(path) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise IoFailure(f"cannot read {path}: {exc}") from exc


def _write_bytes(path, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def _pnm_header(data: bytes):
    """Parse magic, width, height, maxval; return them and the payload offset."""
    tokens = []
    pos = 0
    while len(tokens) < 4:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise CorruptHeader("PNM header ended early")
        tokens.append(data[start:pos])
    # exactly one whitespace byte separates the header from the raster
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise CorruptHeader("PNM header must end with a whitespace byte")
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError as exc:
        raise CorruptHeader(f"bad PNM header fields {tokens[1:]!r}") from exc
    if width <= 0 or height <= 0:
        raise CorruptHeader(f"bad PNM size {width}x{height}")
    return tokens[0], width, height, maxval, pos + 1


def _read_pnm(data: bytes) -> np.ndarray:
    magic, width, height, maxval, offset = _pnm_header(data)
    channels = {b"P5": 1, b"P6": 3}[magic]
    if maxval != 255:
        raise UnsupportedFormat(f"only maxval 255 is supported, got {maxval}")
    count = width * height * channels
    payload = data[offset:offset + count]
    if len(payload) < count:
        raise PayloadTruncated(f"expected {count} bytes of pixel data, found {len(payload)}")
    arr = np.frombuffer(payload, dtype=np.uint8).astype(float) / 255.0
    return arr.reshape(height, width) if channels == 1 else arr.reshape(height, width, 3)


def read_float_raster(path) -> np.ndarray:
    """Read a float raster exactly, without any range check."""
    return _read_float(_read_bytes(path))


def _read_float(data: bytes) -> np.ndarray:
    if not data.startswith(FLOAT_MAGIC):
        raise UnsupportedFormat("missing float raster magic")
    rest = data[len(FLOAT_MAGIC):]
    nl = rest.find(b"\n")
    if nl < 0:
        raise CorruptHeader("float raster header line is not terminated")
    try:
        width, height, channels = (int(t) for t in rest[:nl].split())
    except ValueError as exc:
        raise CorruptHeader(f"bad float raster header {rest[:nl]!r}") from exc
    if width <= 0 or height <= 0 or channels <= 0:
        raise CorruptHeader(f"bad float raster size {width}x{height}x{channels}")
    payload = rest[nl + 1:]
    count = width * height * channels
    if len(payload) < count * 8:
        raise PayloadTruncated(f"expected {count * 8} payload bytes, found {len(payload)}")
    arr = np.frombuffer(payload[:count * 8], dtype="<f8").astype(float)
    return arr.reshape(height, width) if channels == 1 else arr.reshape(height, width, channels)


def read_image(path, check_range: bool = True) -> np.ndarray:
    """Read a P5/P6/float raster as floats in ``[0, 1]``.

    Returns shape ``(h, w)`` for one channel, ``(h, w, c)`` otherwise.
    """
    data = _read_bytes(path)
    if data[:2] in (b"P5", b"P6") and data[2:3].isspace():
        return _read_pnm(data)
    if data.startswith(FLOAT_MAGIC):
        arr = _read_float(data)
        if check_range and arr.size and (arr.min() < -RANGE_SLACK or arr.max() > 1 + RANGE_SLACK):
            raise NotNormalized(f"{path}: float raster values outside [0, 1]")
        return arr
    raise UnsupportedFormat(f"{path}: not a P5, P6 or float raster file")


def _channels(arr: np.ndarray) -> int:
    return 1 if arr.ndim == 2 else arr.shape[2]


def quantize(arr: np.ndarray) -> np.ndarray:
    """``round(v * 255)`` with ties to even, clamped to ``[0, 255]``."""
    arr = np.asarray(arr, dtype=float)
    if arr.size and (arr.min() < 0 or arr.max() > 1):
        warnings.warn("values outside [0, 1] clamped for 8-bit output", RuntimeWarning, stacklevel=3)
        arr = np.clip(arr, 0.0, 1.0)
    return np.rint(arr * 255.0).astype(np.uint8)


def format_for(path) -> str:
    ext = os.path.splitext(str(path))[1].lower()
    try:
        return _FORMATS[ext]
    except KeyError:
        raise UnsupportedFormat(f"cannot infer image format from extension {ext!r}") from None


def write_image(raster, path, format: str | None = None) -> None:
    """Write ``raster`` as ``pgm``, ``ppm`` or ``floatraster`` (inferred from the suffix if omitted)."""
    arr = np.asarray(raster)
    if np.iscomplexobj(arr):
        raise ChannelMismatch("complex rasters must be split into real components before writing")
    arr = arr.astype(float)
    if arr.ndim not in (2, 3):
        raise ChannelMismatch(f"expected (h, w) or (h, w, c) raster, got shape {arr.shape}")
    fmt = format or format_for(path)
    h, w = arr.shape[:2]
    if fmt == "pgm":
        if _channels(arr) != 1:
            raise ChannelMismatch("PGM output needs a single-channel raster")
        _write_bytes(path, b"P5\n%d %d\n255\n" % (w, h) + quantize(arr).tobytes())
    elif fmt == "ppm":
        if _channels(arr) != 3:
            raise ChannelMismatch("PPM output needs a 3-channel raster")
        _write_bytes(path, b"P6\n%d %d\n255\n" % (w, h) + quantize(arr).tobytes())
    elif fmt == "floatraster":
        header = FLOAT_MAGIC + b"%d %d %d\n" % (w, h, _channels(arr))
        _write_bytes(path, header + arr.astype("<f8").tobytes())
    else:
        raise UnsupportedFormat(f"unknown output format {fmt!r}")
