"""Monogenic signal and its local amplitude, orientation and phase."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ParamPair
from .errors import DimensionMismatch
from .grids import ComplexRaster, as_raster
from .lcrt import lcrt_apply

DEGENERATE = 1e-12


@dataclass(frozen=True, eq=False)
class MonogenicField:
    """The triple ``(p, q1, q2)`` = (image, first LCRT, second LCRT)."""

    p: ComplexRaster
    q1: ComplexRaster
    q2: ComplexRaster

    def __post_init__(self):
        if not (self.p.same_layout(self.q1) and self.p.same_layout(self.q2)):
            raise DimensionMismatch("monogenic components must share shape and grids")

    @property
    def amplitude(self) -> np.ndarray:
        return local_amplitude(self)

    @property
    def orientation(self) -> np.ndarray:
        return local_orientation(self)

    @property
    def phase(self) -> np.ndarray:
        return local_phase(self)

    @property
    def riesz_energy(self) -> np.ndarray:
        """``sqrt(|q1|^2 + |q2|^2)`` pointwise."""
        return np.hypot(np.abs(self.q1.samples), np.abs(self.q2.samples))


def monogenic(f, pair: ParamPair) -> MonogenicField:
    f = as_raster(f)
    return MonogenicField(f, lcrt_apply(f, pair, 1), lcrt_apply(f, pair, 2))


def local_amplitude(mf: MonogenicField) -> np.ndarray:
    p = mf.p.samples.real
    return np.sqrt(p ** 2 + np.abs(mf.q1.samples) ** 2 + np.abs(mf.q2.samples) ** 2)


def local_orientation(mf: MonogenicField) -> np.ndarray:
    """``atan(|q2| / |q1|)`` in ``[0, pi/2]``.

    Bins with ``|q1| < 1e-12`` map to ``pi/2``, or to 0 when ``|q2|`` also
    vanishes.
    """
    a1 = np.abs(mf.q1.samples)
    a2 = np.abs(mf.q2.samples)
    out = np.arctan2(a2, a1)
    out = np.where(a1 < DEGENERATE, np.pi / 2, out)
    return np.where((a1 < DEGENERATE) & (a2 < DEGENERATE), 0.0, out)


def local_phase(mf: MonogenicField) -> np.ndarray:
    """``atan(p / sqrt(|q1|^2 + |q2|^2))`` in ``[-pi/2, pi/2]``."""
    p = mf.p.samples.real
    q = mf.riesz_energy
    safe = np.where(q < DEGENERATE, 1.0, q)
    out = np.arctan(p / safe)
    return np.where(q < DEGENERATE, np.sign(p) * np.pi / 2, out)
