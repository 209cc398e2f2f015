"""Sampling grids and the complex raster container.

Every signal in the package is a :class:`ComplexRaster`: a 2D complex
array of shape ``(height, width)`` together with one grid per axis.
Axis 1 runs along a row (the ``width`` direction, numpy axis 1) and
axis 2 runs down a column (the ``height`` direction, numpy axis 0).
A 1D signal is a raster with ``height == 1`` and no axis-2 grid.

Spatial grids are centered, ``x_k = (k - n/2) * dx``. The LCT output of
a spatial grid lives on a :class:`FreqGrid` with coordinates
``u_m = b * xi_m`` where ``xi_m = 2*pi*(m - n/2) / (n*dx)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import DimensionMismatch, GridTooSmall


@dataclass(frozen=True)
class SampleGrid:
    """Centered uniform grid with ``n`` samples spaced ``dx`` apart."""

    n: int
    dx: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise GridTooSmall(f"grid needs at least 2 samples, got n={self.n}")
        if self.n % 2:
            raise GridTooSmall(f"grid size must be even, got n={self.n}")
        if not (math.isfinite(self.dx) and self.dx > 0):
            raise ValueError(f"sample spacing must be positive, got dx={self.dx}")

    @classmethod
    def default(cls, n: int) -> "SampleGrid":
        # dx = 1/sqrt(n): aperture sqrt(n) equals the bandwidth in cycles,
        # which keeps moderate chirps (|a/b| up to a few) below Nyquist.
        return cls(n, 1.0 / math.sqrt(n))

    @property
    def spacing(self) -> float:
        return self.dx

    @property
    def coords(self) -> np.ndarray:
        return (np.arange(self.n) - self.n // 2) * self.dx

    @property
    def xi(self) -> np.ndarray:
        """Angular frequencies of the centered DFT of this grid."""
        return 2 * np.pi * (np.arange(self.n) - self.n // 2) / (self.n * self.dx)

    def freq(self, b: float) -> "FreqGrid":
        return FreqGrid(self, float(b))


@dataclass(frozen=True)
class FreqGrid:
    """LCT-domain grid induced by a spatial grid and a matrix entry ``b``."""

    source: SampleGrid
    b: float

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def xi(self) -> np.ndarray:
        return self.source.xi

    @property
    def coords(self) -> np.ndarray:
        return self.b * self.source.xi

    @property
    def spacing(self) -> float:
        return abs(self.b) * 2 * np.pi / (self.source.n * self.source.dx)

    def matches(self, b: float) -> bool:
        return math.isclose(self.b, b, rel_tol=1e-12, abs_tol=0.0)


Grid = Union[SampleGrid, FreqGrid]


def _grid_xi(grid: Grid) -> np.ndarray:
    return grid.xi


@dataclass(frozen=True, eq=False)
class ComplexRaster:
    """Immutable complex samples on a 1D or 2D grid.

    Parameters
    ----------
    samples : array_like
        Complex values of shape ``(height, width)``. A 1D array is taken
        as a single row.
    grid1 : SampleGrid or FreqGrid
        Grid along a row (``width`` samples).
    grid2 : SampleGrid or FreqGrid, optional
        Grid down a column. ``None`` marks a 1D signal.
    """

    samples: np.ndarray
    grid1: Grid
    grid2: Optional[Grid] = None

    def __post_init__(self):
        data = self.samples
        # read-only complex arrays that own their memory cannot change under
        # us; anything else is copied
        owned = (isinstance(data, np.ndarray) and data.dtype == np.complex128
                 and not data.flags.writeable and data.base is None)
        if not owned:
            data = np.array(data, dtype=np.complex128)
        if data.ndim == 1:
            data = data[np.newaxis, :]
        if data.ndim != 2:
            raise DimensionMismatch(f"raster samples must be 1D or 2D, got shape {data.shape}")
        if data.shape[1] != self.grid1.n:
            raise DimensionMismatch(f"width {data.shape[1]} does not match axis-1 grid n={self.grid1.n}")
        if self.grid2 is None:
            if data.shape[0] != 1:
                raise DimensionMismatch("a raster without an axis-2 grid must have height 1")
        elif data.shape[0] != self.grid2.n:
            raise DimensionMismatch(f"height {data.shape[0]} does not match axis-2 grid n={self.grid2.n}")
        data.setflags(write=False)
        object.__setattr__(self, "samples", data)

    @classmethod
    def from_array(cls, values, dx=None) -> "ComplexRaster":
        """Wrap an array on default (or given) centered spatial grids.

        ``dx`` may be a scalar or a ``(dx1, dx2)`` pair.
        """
        arr = np.asarray(values)
        if arr.ndim not in (1, 2):
            raise DimensionMismatch(f"expected a 1D or 2D array, got shape {arr.shape}")
        dx1, dx2 = (dx, dx) if dx is None or np.isscalar(dx) else dx

        def make(n, h):
            return SampleGrid.default(n) if h is None else SampleGrid(n, float(h))

        if arr.ndim == 1:
            return cls(arr, make(arr.shape[0], dx1))
        return cls(arr, make(arr.shape[1], dx1), make(arr.shape[0], dx2))

    @property
    def width(self) -> int:
        return self.samples.shape[1]

    @property
    def height(self) -> int:
        return self.samples.shape[0]

    @property
    def is_1d(self) -> bool:
        return self.grid2 is None

    @property
    def grids(self) -> tuple:
        return (self.grid1,) if self.grid2 is None else (self.grid1, self.grid2)

    @property
    def values(self) -> np.ndarray:
        """Samples as a 1D array for 1D signals, else the 2D array."""
        return self.samples[0] if self.is_1d else self.samples

    def grid(self, axis: int) -> Grid:
        if axis == 1:
            return self.grid1
        if axis == 2 and self.grid2 is not None:
            return self.grid2
        raise ValueError(f"raster has no axis {axis}")

    def replace(self, samples=None, grid1=None, grid2=None) -> "ComplexRaster":
        return ComplexRaster(
            self.samples if samples is None else samples,
            self.grid1 if grid1 is None else grid1,
            self.grid2 if grid2 is None else grid2,
        )

    def same_layout(self, other: "ComplexRaster") -> bool:
        return self.samples.shape == other.samples.shape and self.grids == other.grids

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)


def as_raster(obj, dx=None) -> ComplexRaster:
    """Return ``obj`` unchanged if it is a raster, else wrap the array."""
    if isinstance(obj, ComplexRaster):
        return obj
    return ComplexRaster.from_array(obj, dx)


def numpy_axis(axis: int) -> int:
    """Map a transform axis (1 = along rows, 2 = along columns) to numpy."""
    if axis == 1:
        return 1
    if axis == 2:
        return 0
    raise ValueError(f"axis must be 1 or 2, got {axis!r}")


def broadcast_along(vec: np.ndarray, axis: int) -> np.ndarray:
    """Shape a per-axis 1D vector so it broadcasts against ``(h, w)``."""
    return vec[np.newaxis, :] if axis == 1 else vec[:, np.newaxis]
