"""Discrete linear canonical transform.

The fast path factors the kernel as chirp, centered DFT, chirp::

    L[m] = C * exp(i d u_m^2 / 2b) * dx * sum_k f[k] exp(i a x_k^2 / 2b) exp(-i x_k xi_m)

with ``u_m = b * xi_m`` and ``C = sqrt(1 / (2 pi i b))`` (principal
root). The output is stored on the :class:`~canonriesz.grids.FreqGrid`
of the input grid, so the scaling step of the decomposition is a pure
relabeling of coordinates and no interpolation is involved.

The oracle path evaluates the same sum as a dense kernel matrix product.
"""

from __future__ import annotations

import math
import warnings

import numpy as np

from .core import ParamMatrix, ParamPair, inverse, validate
from .errors import DimensionMismatch, GridMismatch
from .grids import (
    ComplexRaster,
    FreqGrid,
    SampleGrid,
    as_raster,
    broadcast_along,
    numpy_axis,
)


class ChirpAliasingWarning(RuntimeWarning):
    """The input chirp oscillates faster than the grid can sample."""


def normalization(m: ParamMatrix) -> complex:
    return complex(np.sqrt(1.0 / (1j * 2 * np.pi * m.b)))


def _check_aliasing(grid: SampleGrid, m: ParamMatrix) -> None:
    # local frequency of exp(i a x^2 / 2b) at the aperture edge vs. Nyquist
    edge = (grid.n / 2) * grid.dx
    local = 2 * abs(m.a / (2 * m.b)) * edge
    nyquist = math.pi / grid.dx
    if local > nyquist:
        warnings.warn(
            f"chirp a/(2b)={m.a / (2 * m.b):.4g} reaches {local:.4g} rad/unit at the aperture "
            f"edge, above the grid Nyquist {nyquist:.4g}",
            ChirpAliasingWarning,
            stacklevel=3,
        )


def _frozen(arr):
    # fresh result arrays can back a raster without a defensive copy
    arr.setflags(write=False)
    return arr


def _alternating(n):
    return np.where(np.arange(n) % 2, -1.0, 1.0)


# For even n the centering shifts reduce to (-1)^k sign flips on input and
# output plus a global (-1)^(n/2), so they are folded into the chirps and
# the transforms below run as plain FFTs.
def _centering(n, sign):
    alt = _alternating(n)
    return alt, alt * (1j ** (sign * n))


def _spatial_grid(f: ComplexRaster, axis: int) -> SampleGrid:
    grid = f.grid(axis)
    if not isinstance(grid, SampleGrid):
        raise GridMismatch(f"forward LCT expects a spatial grid on axis {axis}, got {type(grid).__name__}")
    return grid


def _freq_grid(F: ComplexRaster, axis: int, m: ParamMatrix) -> FreqGrid:
    grid = F.grid(axis)
    if not isinstance(grid, FreqGrid) or not grid.matches(m.b):
        raise GridMismatch(
            f"inverse LCT on axis {axis} expects the frequency grid induced by b={m.b}, got {grid!r}"
        )
    return grid


def kernel_matrix(m: ParamMatrix, s: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Dense kernel ``K[j, k] = K_m(s_k, t_j)``, shape ``(len(t), len(s))``."""
    validate(m)
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    pre = np.exp(1j * m.a / (2 * m.b) * s ** 2)
    post = np.exp(1j * m.d / (2 * m.b) * t ** 2)
    cross = np.exp(-1j * np.outer(t, s) / m.b)
    return normalization(m) * post[:, np.newaxis] * cross * pre[np.newaxis, :]


# -- along one axis ---------------------------------------------------------

def _forward_fast(data, axis, grid: SampleGrid, m: ParamMatrix):
    ax = numpy_axis(axis)
    x = grid.coords
    u = m.b * grid.xi
    flip_in, flip_out = _centering(grid.n, -1)
    pre = flip_in * np.exp(1j * m.a / (2 * m.b) * x ** 2)
    post = flip_out * normalization(m) * grid.dx * np.exp(1j * m.d / (2 * m.b) * u ** 2)
    spec = np.fft.fft(data * broadcast_along(pre, axis), axis=ax)
    return _frozen(spec * broadcast_along(post, axis))


def _inverse_fast(data, axis, fgrid: FreqGrid, m: ParamMatrix):
    # forward LCT with {d, -b, -c, a} from the u grid back to the x grid
    ax = numpy_axis(axis)
    minv = inverse(m)
    u = fgrid.coords
    x = fgrid.source.coords
    flip_in, flip_out = _centering(fgrid.n, 1)
    pre = flip_in * np.exp(1j * minv.a / (2 * minv.b) * u ** 2)
    post = flip_out * normalization(minv) * fgrid.spacing * fgrid.n * np.exp(1j * minv.d / (2 * minv.b) * x ** 2)
    sig = np.fft.ifft(data * broadcast_along(pre, axis), axis=ax)
    return _frozen(sig * broadcast_along(post, axis))


def _apply_matrix(data, axis, K):
    # K has shape (n_out, n_in) and acts on the samples along ``axis``
    if axis == 1:
        return data @ K.T
    return K @ data


def _forward_oracle(data, axis, grid: SampleGrid, m: ParamMatrix):
    K = kernel_matrix(m, grid.coords, m.b * grid.xi)
    return _apply_matrix(data, axis, K) * grid.dx


def _inverse_oracle(data, axis, fgrid: FreqGrid, m: ParamMatrix):
    K = kernel_matrix(inverse(m), fgrid.coords, fgrid.source.coords)
    return _apply_matrix(data, axis, K) * fgrid.spacing


_FORWARD = {"fast": _forward_fast, "oracle": _forward_oracle}
_INVERSE = {"fast": _inverse_fast, "oracle": _inverse_oracle}


def _set_grid(f: ComplexRaster, axis: int, grid) -> dict:
    return {"grid1": grid} if axis == 1 else {"grid2": grid}


def lct_axis(f, m: ParamMatrix, axis: int = 1, method: str = "fast") -> ComplexRaster:
    """Forward 1D LCT of every line of ``f`` along ``axis``.

    Parameters
    ----------
    f : ComplexRaster or array_like
        Input on a spatial grid along ``axis``.
    m : ParamMatrix
        Transform parameters, ``b != 0``.
    axis : {1, 2}
        1 transforms each row, 2 each column.
    method : {"fast", "oracle"}
        ``"fast"`` is the chirp-FFT-chirp path, ``"oracle"`` the O(N^2)
        kernel sum.
    """
    f = as_raster(f)
    validate(m)
    grid = _spatial_grid(f, axis)
    if method == "fast":
        _check_aliasing(grid, m)
    out = _FORWARD[method](f.samples, axis, grid, m)
    return f.replace(samples=out, **_set_grid(f, axis, grid.freq(m.b)))


def lct_inverse_axis(F, m: ParamMatrix, axis: int = 1, method: str = "fast") -> ComplexRaster:
    """Inverse of :func:`lct_axis`; ``F`` must sit on the grid it produced."""
    if not isinstance(F, ComplexRaster):
        raise GridMismatch("inverse LCT needs a raster carrying its frequency grid")
    validate(m)
    fgrid = _freq_grid(F, axis, m)
    out = _INVERSE[method](F.samples, axis, fgrid, m)
    return F.replace(samples=out, **_set_grid(F, axis, fgrid.source))


# -- 1D -------------------------------------------------------------------

def _require_1d(f: ComplexRaster) -> ComplexRaster:
    if not f.is_1d:
        raise DimensionMismatch("expected a 1D raster (height 1, no axis-2 grid)")
    return f


def lct_forward_1d(f, m: ParamMatrix) -> ComplexRaster:
    return lct_axis(_require_1d(as_raster(f)), m, 1)


def lct_oracle_1d(f, m: ParamMatrix) -> ComplexRaster:
    """Reference LCT by direct kernel summation (no FFT)."""
    return lct_axis(_require_1d(as_raster(f)), m, 1, method="oracle")


def lct_inverse_1d(F: ComplexRaster, m: ParamMatrix) -> ComplexRaster:
    return lct_inverse_axis(_require_1d(F), m, 1)


def lct_oracle_inverse_1d(F: ComplexRaster, m: ParamMatrix) -> ComplexRaster:
    return lct_inverse_axis(_require_1d(F), m, 1, method="oracle")


# -- 2D -------------------------------------------------------------------

def _require_2d(f: ComplexRaster) -> ComplexRaster:
    if f.is_1d:
        raise DimensionMismatch("expected a 2D raster")
    return f


def lct_forward_2d(f, pair: ParamPair, method: str = "fast") -> ComplexRaster:
    """Separable 2D LCT: rows with ``pair.axis1``, then columns with ``pair.axis2``."""
    f = _require_2d(as_raster(f))
    return lct_axis(lct_axis(f, pair.axis1, 1, method), pair.axis2, 2, method)


def lct_inverse_2d(F: ComplexRaster, pair: ParamPair, method: str = "fast") -> ComplexRaster:
    _require_2d(F)
    return lct_inverse_axis(lct_inverse_axis(F, pair.axis2, 2, method), pair.axis1, 1, method)


def lct_oracle_2d(f, pair: ParamPair) -> ComplexRaster:
    return lct_forward_2d(f, pair, method="oracle")
