"""Parameter matrices, chirp fields, sharpness and named special cases."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DetNotOne, ZeroB, ZeroC
from .grids import ComplexRaster, Grid

DET_TOL = 1e-9
ZERO_TOL = 1e-12


@dataclass(frozen=True)
class ParamMatrix:
    """Real 2x2 matrix ``[[a, b], [c, d]]`` parametrizing a 1D LCT.

    Construction does not validate; call :func:`validate` (every transform
    does) or build from config with :meth:`from_sequence`.
    """

    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> "ParamMatrix":
        if len(values) != 4:
            raise ValueError(f"a parameter matrix needs 4 entries [a, b, c, d], got {len(values)}")
        m = cls(*(float(v) for v in values))
        validate(m)
        return m

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def as_array(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=float)

    def as_list(self) -> list:
        return [self.a, self.b, self.c, self.d]

    def inverse(self) -> "ParamMatrix":
        return inverse(self)

    def sharpness(self) -> float:
        return sharpness(self)

    def __matmul__(self, other: "ParamMatrix") -> "ParamMatrix":
        return ParamMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def is_symmetric_diagonal(self) -> bool:
        """True when ``a == d``, the hypothesis of the multiplier identity."""
        return math.isclose(self.a, self.d, rel_tol=1e-12, abs_tol=ZERO_TOL)


@dataclass(frozen=True)
class ParamPair:
    """Per-axis matrices ``(axis1, axis2)`` for 2D transforms."""

    axis1: ParamMatrix
    axis2: ParamMatrix

    @classmethod
    def from_sequence(cls, values) -> "ParamPair":
        if len(values) != 2:
            raise ValueError("a parameter pair needs two [a, b, c, d] arrays")
        return cls(ParamMatrix.from_sequence(values[0]), ParamMatrix.from_sequence(values[1]))

    def __iter__(self):
        return iter((self.axis1, self.axis2))

    def __getitem__(self, axis: int) -> ParamMatrix:
        # 1-based, matching the transform axis numbering
        if axis == 1:
            return self.axis1
        if axis == 2:
            return self.axis2
        raise IndexError(f"axis must be 1 or 2, got {axis!r}")

    def inverse(self) -> "ParamPair":
        return ParamPair(inverse(self.axis1), inverse(self.axis2))

    def sharpness(self) -> tuple:
        """Per-axis ``b/c``, with ``None`` where ``c == 0``."""
        out = []
        for m in self:
            try:
                out.append(sharpness(m))
            except ZeroC:
                out.append(None)
        return tuple(out)

    def as_list(self) -> list:
        return [self.axis1.as_list(), self.axis2.as_list()]


def validate(m: ParamMatrix) -> None:
    """Raise if ``m`` is not unimodular or has ``b == 0``."""
    det = m.det
    if not abs(det - 1.0) <= DET_TOL:
        raise DetNotOne(det)
    if abs(m.b) <= ZERO_TOL:
        raise ZeroB()


def validate_pair(pair: ParamPair) -> None:
    validate(pair.axis1)
    validate(pair.axis2)


def inverse(m: ParamMatrix) -> ParamMatrix:
    validate(m)
    return ParamMatrix(m.d, -m.b, -m.c, m.a)


def sharpness(m: ParamMatrix) -> float:
    """Edge sharpness ``b/c`` of a parameter matrix."""
    if m.c == 0:
        raise ZeroC()
    return m.b / m.c


def _snap(v: float) -> float:
    return 0.0 if abs(v) < 1e-15 else v


def special(kind: str, *params: float) -> ParamMatrix:
    """Named special-case matrices.

    ``fourier``, ``frft(alpha)``, ``scaling(sigma)``,
    ``fresnel(z, wavelength)`` and ``chirp_mul(q)``. Cases with ``b == 0``
    are rejected with :class:`ZeroB` since the library only covers
    ``b != 0``.
    """
    kind = kind.lower()
    if kind == "fourier":
        m = ParamMatrix(0.0, 1.0, -1.0, 0.0)
    elif kind == "frft":
        (alpha,) = params
        ca, sa = _snap(math.cos(alpha)), _snap(math.sin(alpha))
        m = ParamMatrix(ca, sa, -sa, ca)
    elif kind == "scaling":
        (sigma,) = params
        m = ParamMatrix(sigma, 0.0, 0.0, 1.0 / sigma)
    elif kind == "fresnel":
        z, wavelength = params
        m = ParamMatrix(1.0, z * wavelength / (2 * math.pi), 0.0, 1.0)
    elif kind == "chirp_mul":
        (q,) = params
        m = ParamMatrix(1.0, 0.0, -q, 1.0)
    else:
        raise ValueError(f"unknown special matrix kind {kind!r}")
    validate(m)
    return m


FOURIER = ParamMatrix(0.0, 1.0, -1.0, 0.0)
CLASSICAL = ParamPair(FOURIER, FOURIER)


@dataclass(frozen=True)
class ChirpSpec:
    """Quadratic phase ``exp(sign * i * sum_j num_j / (2 den_j) * x_j**2)``."""

    numerator: tuple
    denominator: tuple
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(float(v) for v in np.atleast_1d(self.numerator)))
        object.__setattr__(self, "denominator", tuple(float(v) for v in np.atleast_1d(self.denominator)))
        if len(self.numerator) != len(self.denominator):
            raise ValueError("chirp numerator and denominator need the same length")
        if any(v == 0 for v in self.denominator):
            raise ZeroB("chirp denominator entries must be nonzero")
        if self.sign not in (1, -1):
            raise ValueError("chirp sign must be +1 or -1")

    def rates(self) -> tuple:
        return tuple(n / (2 * d) for n, d in zip(self.numerator, self.denominator))


def chirp_field(spec: ChirpSpec, grid) -> ComplexRaster:
    """Sample a chirp on a grid, or on a ``(grid1, grid2)`` pair.

    The coordinates are the grid's own coordinates, so a chirp on a
    :class:`~canonriesz.grids.FreqGrid` is evaluated at ``u = b * xi``.
    """
    grids: tuple = tuple(grid) if isinstance(grid, (tuple, list)) else (grid,)
    if len(grids) != len(spec.numerator):
        raise ValueError(f"chirp has {len(spec.numerator)} axes, grid has {len(grids)}")
    rates = spec.rates()
    phase1 = rates[0] * grids[0].coords ** 2
    if len(grids) == 1:
        return ComplexRaster(np.exp(spec.sign * 1j * phase1), grids[0])
    phase2 = rates[1] * grids[1].coords ** 2
    phase = phase1[np.newaxis, :] + phase2[:, np.newaxis]
    return ComplexRaster(np.exp(spec.sign * 1j * phase), grids[0], grids[1])


def chirp_vector(rate: float, grid: Grid, sign: int = 1) -> np.ndarray:
    """1D chirp ``exp(sign * i * rate * x**2)`` on one axis grid."""
    return np.exp(sign * 1j * rate * grid.coords ** 2)
