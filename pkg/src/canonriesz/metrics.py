"""Image comparison metrics and convergence measurements."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .core import ParamMatrix, ParamPair
from .errors import DimensionMismatch, TooSmall
from .grids import as_raster
from .lcrt import classical_riesz, lcrt_apply

CHANNELS = ("gray", "red", "green", "blue")


def _pair_arrays(f, g):
    f = np.asarray(f, dtype=float)
    g = np.asarray(g, dtype=float)
    if f.shape != g.shape:
        raise DimensionMismatch(f"cannot compare shapes {f.shape} and {g.shape}")
    return f, g


def mse(f, g) -> float:
    """Mean of squared pixel differences."""
    f, g = _pair_arrays(f, g)
    return float(np.mean((f - g) ** 2))


def block_bounds(n: int, parts: int = 3) -> list:
    """Split ``range(n)`` into ``parts`` blocks of ``n // parts``; the last takes the rest."""
    step = n // parts
    edges = [i * step for i in range(parts)] + [n]
    return list(zip(edges[:-1], edges[1:]))


def subregion_mse(f, g) -> np.ndarray:
    """3x3 grid of block MSEs; ``[i, j]`` is row block ``i``, column block ``j``."""
    f, g = _pair_arrays(f, g)
    if f.ndim != 2:
        raise DimensionMismatch("sub-region MSE needs single-channel 2D rasters")
    h, w = f.shape
    if h < 3 or w < 3:
        raise TooSmall(f"sub-region MSE needs at least 3x3 pixels, got {h}x{w}")
    sq = (f - g) ** 2
    out = np.empty((3, 3))
    for i, (r0, r1) in enumerate(block_bounds(h)):
        for j, (c0, c1) in enumerate(block_bounds(w)):
            out[i, j] = sq[r0:r1, c0:c1].mean()
    return out


def subregion_areas(h: int, w: int) -> np.ndarray:
    rows = [r1 - r0 for r0, r1 in block_bounds(h)]
    cols = [c1 - c0 for c0, c1 in block_bounds(w)]
    return np.outer(rows, cols)


@dataclass
class MetricsReport:
    global_mse: float
    subregion_mse: np.ndarray
    sharpness: tuple
    channel: str = "gray"

    def to_dict(self) -> dict:
        return {
            "channel": self.channel,
            "mse": self.global_mse,
            "subregion_mse": np.asarray(self.subregion_mse).tolist(),
            "sharpness": list(self.sharpness),
        }


def metrics_report(source, edge, sharpness=(None, None), channel: str = "gray") -> MetricsReport:
    if channel not in CHANNELS:
        raise ValueError(f"unknown channel {channel!r}")
    return MetricsReport(mse(source, edge), subregion_mse(source, edge), tuple(sharpness), channel)


# -- convergence toward the classical Riesz transform ------------------------

def near_classical_matrix(eps: float) -> ParamMatrix:
    """``{eps, 1 + eps, c, eps}`` with ``c`` solved from ``ad - bc = 1``.

    The solution is ``c = eps - 1``; the matrix tends to the Fourier matrix
    and its sharpness ``(1 + eps) / (eps - 1)`` tends to -1.
    """
    a = d = float(eps)
    b = 1.0 + eps
    return ParamMatrix(a, b, (a * d - 1.0) / b, d)


def convergence_family(epsilons: Sequence[float]) -> list:
    return [ParamPair(near_classical_matrix(e), near_classical_matrix(e)) for e in epsilons]


@dataclass(frozen=True)
class ConvergencePoint:
    epsilon: float
    sharpness: tuple
    distance: float


@dataclass
class ConvergenceCurve:
    points: list = field(default_factory=list)

    def __post_init__(self):
        eps = [p.epsilon for p in self.points]
        if any(later >= earlier for earlier, later in zip(eps, eps[1:])):
            raise ValueError("convergence epsilons must be strictly decreasing")

    @property
    def epsilons(self) -> list:
        return [p.epsilon for p in self.points]

    @property
    def distances(self) -> list:
        return [p.distance for p in self.points]

    def to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["epsilon", "sharpness_axis1", "sharpness_axis2", "relative_l2_distance"])
            for p in self.points:
                writer.writerow([repr(p.epsilon), *(repr(s) for s in p.sharpness), repr(p.distance)])


def convergence_sweep(f, family: Sequence[ParamPair], epsilons: Optional[Sequence[float]] = None,
                      axis: int = 1) -> ConvergenceCurve:
    """Relative L2 distance of ``R_axis^A f`` from the classical ``R_axis f``.

    ``epsilons`` label the family members and must decrease strictly; the
    default labels are ``len(family) - 1, ..., 0``.
    """
    f = as_raster(f)
    if epsilons is None:
        epsilons = list(range(len(family) - 1, -1, -1))
    if len(epsilons) != len(family):
        raise ValueError("need one epsilon per family member")
    reference = classical_riesz(f, axis).samples
    ref_norm = np.linalg.norm(reference)
    points = []
    for eps, pair in zip(epsilons, family):
        out = lcrt_apply(f, pair, axis).samples
        points.append(ConvergencePoint(float(eps), pair.sharpness(), float(np.linalg.norm(out - reference) / ref_norm)))
    return ConvergenceCurve(points)

