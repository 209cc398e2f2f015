import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from canonriesz.core import FOURIER, ParamMatrix, ParamPair
from canonriesz.errors import DimensionMismatch, GridMismatch, GridTooSmall
from canonriesz.grids import ComplexRaster, SampleGrid
from canonriesz.lct import (
    ChirpAliasingWarning,
    lct_axis,
    lct_forward_1d,
    lct_forward_2d,
    lct_inverse_1d,
    lct_inverse_2d,
    lct_inverse_axis,
    lct_oracle_1d,
    lct_oracle_2d,
    lct_oracle_inverse_1d,
    normalization,
)
from canonriesz.presets import PAIR_A, all_matrices

from conftest import random_complex, relerr

M_REF = ParamMatrix(6, 50, 0.7, 6)


def naive_lct(f, x, u, m, dx):
    """Kernel sum written out term by term, independent of the package."""
    C = np.sqrt(1 / (1j * 2 * np.pi * m.b))
    out = np.zeros(len(u), dtype=complex)
    for j, uj in enumerate(u):
        acc = 0j
        for k, xk in enumerate(x):
            acc += f[k] * np.exp(1j * m.a / (2 * m.b) * xk ** 2 - 1j * xk * uj / m.b + 1j * m.d / (2 * m.b) * uj ** 2)
        out[j] = C * acc * dx
    return out


def test_oracle_matches_loop_sum(rng):
    f = random_complex(rng, 32)
    grid = SampleGrid.default(32)
    expected = naive_lct(f, grid.coords, M_REF.b * grid.xi, M_REF, grid.dx)
    # output chirp phases reach ~5e4 rad here, so roundoff sits near 1e-12
    assert relerr(lct_oracle_1d(f, M_REF).values, expected) <= 1e-10


@pytest.mark.parametrize("m", all_matrices(), ids=str)
def test_fast_matches_oracle(rng, m):
    f = random_complex(rng, 128)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ChirpAliasingWarning)
        fast = lct_forward_1d(f, m).values
    assert relerr(fast, lct_oracle_1d(f, m).values) <= 1e-9


def test_zero_in_zero_out():
    out = lct_forward_1d(np.zeros(64), M_REF)
    assert not out.values.any()
    assert not lct_inverse_1d(out, M_REF).values.any()


def test_fourier_case_is_unitary_dft_times_sqrt_minus_i(rng):
    f = random_complex(rng, 64)
    grid = SampleGrid.default(64)
    dft = np.fft.fftshift(np.fft.fft(np.fft.ifftshift(f))) * grid.dx / np.sqrt(2 * np.pi)
    out = lct_forward_1d(f, FOURIER).values
    assert np.allclose(np.abs(out), np.abs(dft), rtol=1e-12, atol=1e-14)
    assert np.allclose(out / dft, np.sqrt(-1j), rtol=1e-12)


def test_delta_impulse_gives_kernel_at_origin():
    grid = SampleGrid.default(64)
    f = np.zeros(64)
    f[32] = 1 / grid.dx
    u = M_REF.b * grid.xi
    expected = normalization(M_REF) * np.exp(1j * M_REF.d / (2 * M_REF.b) * u ** 2)
    assert relerr(lct_oracle_1d(f, M_REF).values, expected) <= 1e-12
    assert relerr(lct_forward_1d(f, M_REF).values, expected) <= 1e-12


def test_oracle_linearity(rng):
    f, g = random_complex(rng, 64), random_complex(rng, 64)
    al, be = 0.7 - 0.2j, -1.3
    lhs = lct_oracle_1d(al * f + be * g, M_REF).values
    rhs = al * lct_oracle_1d(f, M_REF).values + be * lct_oracle_1d(g, M_REF).values
    assert np.abs(lhs - rhs).max() <= 1e-12 * np.abs(rhs).max()


def test_principal_branch():
    for b in (50.0, -50.0, 1.0):
        c = normalization(ParamMatrix(0, b, -1 / b, 0))
        assert -np.pi / 2 < np.angle(c) <= np.pi / 2


# -- inverse -------------------------------------------------------------------

@pytest.mark.parametrize("m", [M_REF, FOURIER, ParamMatrix(3, -400, -0.02, 3)], ids=str)
def test_round_trip_1d(rng, m):
    f = random_complex(rng, 256)
    assert relerr(lct_inverse_1d(lct_forward_1d(f, m), m).values, f) <= 1e-10


def test_freq_grid_spacing():
    F = lct_forward_1d(np.ones(16), ParamMatrix(0, -4, 0.25, 0))
    grid = F.grid1
    assert grid.spacing == pytest.approx(4 * 2 * np.pi / (16 * SampleGrid.default(16).dx))
    assert grid.xi[8] == 0


def test_inverse_oracle_matches_fast(rng):
    F = lct_forward_1d(random_complex(rng, 64), M_REF)
    assert relerr(lct_oracle_inverse_1d(F, M_REF).values, lct_inverse_1d(F, M_REF).values) <= 1e-10


def test_inverse_grid_mismatch(rng):
    f = random_complex(rng, 32)
    with pytest.raises(GridMismatch):
        lct_inverse_1d(ComplexRaster.from_array(f), M_REF)
    F = lct_forward_1d(f, M_REF)
    with pytest.raises(GridMismatch):
        lct_inverse_1d(F, FOURIER)
    with pytest.raises(GridMismatch):
        lct_forward_1d(F, M_REF)


def test_odd_or_tiny_grids_rejected():
    with pytest.raises(GridTooSmall):
        lct_forward_1d(np.ones(1), M_REF)
    with pytest.raises(GridTooSmall):
        lct_forward_1d(np.ones(7), M_REF)


def test_1d_requires_1d(rng):
    with pytest.raises(DimensionMismatch):
        lct_forward_1d(random_complex(rng, (4, 4)), M_REF)


def test_unitarity(rng):
    f = random_complex(rng, 256)
    F = lct_forward_1d(f, M_REF)
    lhs = np.sum(np.abs(F.values) ** 2) * F.grid1.spacing
    rhs = np.sum(np.abs(f) ** 2) * F.grid1.source.dx
    assert lhs == pytest.approx(rhs, rel=1e-8)


def test_aliasing_warning():
    with pytest.warns(ChirpAliasingWarning):
        lct_forward_1d(np.ones(256), ParamMatrix(20, 1, 399, 20))
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        lct_forward_1d(np.ones(256), M_REF)


valid_matrices = st.builds(
    lambda a, b, d: ParamMatrix(a, b, (a * d - 1) / b, d),
    st.floats(-3, 3),
    st.one_of(st.floats(0.2, 50), st.floats(-50, -0.2)),
    st.floats(-3, 3),
)


@settings(max_examples=40, deadline=None)
@given(valid_matrices, st.integers(0, 2 ** 32 - 1))
def test_round_trip_property(m, seed):
    f = random_complex(np.random.default_rng(seed), 128)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ChirpAliasingWarning)
        back = lct_inverse_1d(lct_forward_1d(f, m), m).values
    assert relerr(back, f) <= 1e-9


# -- 2D ------------------------------------------------------------------------

def test_separability_order(rng):
    f = ComplexRaster.from_array(random_complex(rng, (32, 64)))
    rows_first = lct_axis(lct_axis(f, PAIR_A.axis1, 1), PAIR_A.axis2, 2).samples
    cols_first = lct_axis(lct_axis(f, PAIR_A.axis2, 2), PAIR_A.axis1, 1).samples
    assert relerr(rows_first, cols_first) <= 1e-10
    assert relerr(lct_forward_2d(f, PAIR_A).samples, rows_first) == 0


def test_round_trip_2d_gaussian(gauss128):
    F = lct_forward_2d(gauss128, PAIR_A)
    assert relerr(lct_inverse_2d(F, PAIR_A).samples, gauss128) <= 1e-9


def test_fourier_pair_magnitudes(rng):
    f = random_complex(rng, (32, 32))
    F = lct_forward_2d(f, ParamPair(FOURIER, FOURIER))
    dft = np.fft.fftshift(np.fft.fft2(np.fft.ifftshift(f)))
    dx = SampleGrid.default(32).dx
    assert np.allclose(np.abs(F.samples), np.abs(dft) * dx ** 2 / (2 * np.pi), rtol=1e-12)


def test_oracle_2d_matches_fast(rng):
    f = random_complex(rng, (32, 48))
    assert relerr(lct_oracle_2d(f, PAIR_A).samples, lct_forward_2d(f, PAIR_A).samples) <= 1e-10


def test_inverse_axis_restores_spatial_grid(rng):
    f = ComplexRaster.from_array(random_complex(rng, (8, 8)))
    F = lct_axis(f, M_REF, 2)
    back = lct_inverse_axis(F, M_REF, 2)
    assert back.grids == f.grids
