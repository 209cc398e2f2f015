"""Linear canonical Riesz and Hilbert transforms.

Two independent routes compute the LCRT:

* :func:`lcrt_apply` multiplies the 2D LCT by ``-i xi_j / |xi|`` and
  inverts (valid when ``a == d`` on both axes);
* :func:`lcrt_conjugated` wraps the classical FFT Riesz transform in
  chirps, ``e_{b,-d} * R_j(e_{b,a} * f)``, for any ``b != 0``.

On the ``u = b * xi`` grid the LCT-domain symbol ``(w_j / b_j) / |w / b|``
is exactly ``xi_j / |xi|``, which is what :func:`riesz_symbol` samples.
"""

from __future__ import annotations

import numpy as np

from .core import ChirpSpec, ParamMatrix, ParamPair, chirp_field, validate, validate_pair
from .errors import DimensionMismatch, HypothesisViolated
from .grids import ComplexRaster, as_raster, broadcast_along
from .lct import lct_axis, lct_forward_2d, lct_inverse_2d, lct_inverse_axis


def _check_axis(axis):
    if axis not in (1, 2):
        raise ValueError(f"axis must be 1 or 2, got {axis!r}")


def riesz_symbol(axis: int, grids) -> np.ndarray:
    """Samples of ``-i xi_axis / |xi|`` in centered order, zero at DC.

    ``grids`` is the ``(axis1, axis2)`` grid pair of a 2D raster; spatial
    and frequency grids both work since only ``xi`` is used.
    """
    _check_axis(axis)
    g1, g2 = grids
    xi1, xi2 = np.meshgrid(g1.xi, g2.xi)
    r = np.hypot(xi1, xi2)
    num = xi1 if axis == 1 else xi2
    ratio = np.divide(num, r, out=np.zeros_like(r), where=r > 0)
    return -1j * ratio


def hilbert_symbol(grid) -> np.ndarray:
    """Samples of ``-i sgn(xi)`` along one axis, zero at DC."""
    return -1j * np.sign(grid.xi)


def _require_2d(f: ComplexRaster) -> ComplexRaster:
    if f.is_1d:
        raise DimensionMismatch("Riesz transforms need a 2D raster")
    return f


def _require_multiplier_hypothesis(m: ParamMatrix, label: str) -> None:
    if not m.is_symmetric_diagonal():
        raise HypothesisViolated(
            f"{label}: multiplier form needs a == d, got a={m.a}, d={m.d}"
        )


def classical_riesz(f, axis: int) -> ComplexRaster:
    """Classical Riesz transform ``R_axis`` as an FFT multiplier."""
    _check_axis(axis)
    f = _require_2d(as_raster(f))
    g1, g2 = f.grids
    xi1 = 2 * np.pi * np.fft.fftfreq(g1.n, g1.spacing)
    xi2 = 2 * np.pi * np.fft.fftfreq(g2.n, g2.spacing)
    x1, x2 = np.meshgrid(xi1, xi2)
    r = np.hypot(x1, x2)
    num = x1 if axis == 1 else x2
    symbol = -1j * np.divide(num, r, out=np.zeros_like(r), where=r > 0)
    return f.replace(samples=np.fft.ifft2(np.fft.fft2(f.samples) * symbol))


def lcrt_apply(f, pair: ParamPair, axis: int, method: str = "fast") -> ComplexRaster:
    """LCRT as an LCT-domain multiplier: ``L_{A^-1}(symbol * L_A f)``.

    ``method="oracle"`` runs both LCTs as dense kernel sums.
    """
    _check_axis(axis)
    f = _require_2d(as_raster(f))
    validate_pair(pair)
    _require_multiplier_hypothesis(pair.axis1, "axis 1")
    _require_multiplier_hypothesis(pair.axis2, "axis 2")
    F = lct_forward_2d(f, pair, method)
    G = F.replace(samples=F.samples * riesz_symbol(axis, F.grids))
    return lct_inverse_2d(G, pair, method)


def lcrt_oracle(f, pair: ParamPair, axis: int) -> ComplexRaster:
    return lcrt_apply(f, pair, axis, method="oracle")


def lcrt_conjugated(f, pair: ParamPair, axis: int) -> ComplexRaster:
    """LCRT through chirp conjugation of the classical Riesz transform."""
    _check_axis(axis)
    f = _require_2d(as_raster(f))
    validate_pair(pair)
    m1, m2 = pair
    b = (m1.b, m2.b)
    pre = chirp_field(ChirpSpec((m1.a, m2.a), b, +1), f.grids)
    post = chirp_field(ChirpSpec((m1.d, m2.d), b, -1), f.grids)
    inner = classical_riesz(f.replace(samples=f.samples * pre.samples), axis)
    return f.replace(samples=post.samples * inner.samples)


def hlcht_apply(f, m: ParamMatrix, axis: int) -> ComplexRaster:
    """Half-plane linear canonical Hilbert transform along one axis.

    Every line along ``axis`` goes through the 1D LCT with ``m``, is
    multiplied by ``-i sgn(xi)`` and transformed back. A 1D raster with
    ``axis=1`` gives the 1D linear canonical Hilbert transform.
    """
    _check_axis(axis)
    f = as_raster(f)
    validate(m)
    _require_multiplier_hypothesis(m, f"axis {axis}")
    F = lct_axis(f, m, axis)
    sym = broadcast_along(hilbert_symbol(F.grid(axis)), axis)
    return lct_inverse_axis(F.replace(samples=F.samples * sym), m, axis)


def lcht_apply(f, m: ParamMatrix) -> ComplexRaster:
    """1D linear canonical Hilbert transform."""
    f = as_raster(f)
    if not f.is_1d:
        raise DimensionMismatch("lcht_apply takes a 1D signal; use hlcht_apply for images")
    return hlcht_apply(f, m, 1)

