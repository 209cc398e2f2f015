import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from canonriesz.errors import (
    ChannelMismatch,
    CorruptHeader,
    IoFailure,
    NotNormalized,
    PayloadTruncated,
    UnsupportedFormat,
)
from canonriesz.imageio import FLOAT_MAGIC, format_for, quantize, read_float_raster, read_image, write_image


def test_p5_example(tmp_path):
    path = tmp_path / "a.pgm"
    path.write_bytes(b"P5\n2 2\n255\n" + bytes([0, 255, 128, 64]))
    img = read_image(path)
    assert img.shape == (2, 2)
    assert np.array_equal(img, np.array([[0, 1], [128 / 255, 64 / 255]]))


def test_pnm_comments_and_p6(tmp_path):
    path = tmp_path / "c.ppm"
    path.write_bytes(b"P6 # rgb\n# size next\n1 2\n255\n" + bytes([1, 2, 3, 4, 5, 6]))
    img = read_image(path)
    assert img.shape == (2, 1, 3)
    assert np.array_equal(img[1, 0] * 255, [4, 5, 6])


@pytest.mark.parametrize("data, err", [
    (b"P6\n1 1\n65535\n" + bytes(6), UnsupportedFormat),
    (b"P5\n2 2\n255\n" + bytes(3), PayloadTruncated),
    (b"P5\n2 x\n255\n" + bytes(4), CorruptHeader),
    (b"P5\n2 2\n", CorruptHeader),
    (b"GIF89a", UnsupportedFormat),
    (FLOAT_MAGIC + b"2 2 1\n" + bytes(31), PayloadTruncated),
    (FLOAT_MAGIC + b"2 2\n" + bytes(32), CorruptHeader),
])
def test_read_errors(tmp_path, data, err):
    path = tmp_path / "bad"
    path.write_bytes(data)
    with pytest.raises(err):
        read_image(path)


def test_missing_file(tmp_path):
    with pytest.raises(IoFailure):
        read_image(tmp_path / "nope.pgm")
    with pytest.raises(OSError):
        read_image(tmp_path / "nope.pgm")


def test_float_round_trip_exact(tmp_path, rng):
    for shape in [(5, 7), (4, 3, 3)]:
        arr = rng.uniform(size=shape)
        path = tmp_path / "x.lcrtf"
        write_image(arr, path)
        back = read_image(path)
        assert back.shape == shape and np.array_equal(back, arr)


def test_float_range_check(tmp_path):
    path = tmp_path / "wide.lcrtf"
    arr = np.array([[-2.0, 3.5]])
    write_image(arr, path)
    with pytest.raises(NotNormalized):
        read_image(path)
    assert np.array_equal(read_image(path, check_range=False), arr)
    assert np.array_equal(read_float_raster(path), arr)


def test_float_layout(tmp_path):
    path = tmp_path / "l.frs"
    write_image(np.array([[0.25, 0.5]]), path)
    data = path.read_bytes()
    assert data == FLOAT_MAGIC + b"2 1 1\n" + np.array([0.25, 0.5], dtype="<f8").tobytes()


def test_quantization_rule(tmp_path):
    assert quantize(np.array([0.5]))[0] == 128
    assert quantize(np.array([0.5 / 255, 1.5 / 255, 2.5 / 255])).tolist() == [0, 2, 2]
    path = tmp_path / "z.pgm"
    write_image(np.zeros((3, 4)), path)
    assert path.read_bytes() == b"P5\n4 3\n255\n" + bytes(12)


def test_clamp_warns(tmp_path):
    with pytest.warns(RuntimeWarning):
        write_image(np.array([[1.5, -0.5]]), tmp_path / "w.pgm")
    assert read_image(tmp_path / "w.pgm").tolist() == [[1.0, 0.0]]


def test_channel_mismatch(tmp_path):
    with pytest.raises(ChannelMismatch):
        write_image(np.zeros((4, 4, 3)), tmp_path / "a.pgm")
    with pytest.raises(ChannelMismatch):
        write_image(np.zeros((4, 4)), tmp_path / "a.ppm")
    with pytest.raises(ChannelMismatch):
        write_image(np.zeros((4, 4), dtype=complex), tmp_path / "a.lcrtf")


def test_format_inference(tmp_path):
    assert format_for("x.PGM") == "pgm" and format_for("y.lcrtf") == "floatraster"
    with pytest.raises(UnsupportedFormat):
        format_for("x.png")
    write_image(np.zeros((2, 2)), tmp_path / "noext", format="pgm")
    assert read_image(tmp_path / "noext").shape == (2, 2)


def test_write_failure(tmp_path):
    with pytest.raises(IoFailure):
        write_image(np.zeros((2, 2)), tmp_path / "missing" / "a.pgm")


unit = st.floats(0, 1, allow_nan=False)


@settings(max_examples=50, deadline=None)
@given(arrays(float, st.tuples(st.integers(1, 6), st.integers(1, 6)), elements=unit), st.booleans())
def test_pnm_round_trip_error(tmp_path_factory, arr, rgb):
    path = tmp_path_factory.mktemp("rt") / ("a.ppm" if rgb else "a.pgm")
    if rgb:
        arr = np.stack([arr, arr[::-1], 1 - arr], axis=2)
    write_image(arr, path)
    assert np.abs(read_image(path) - arr).max() <= 1 / 510 + 1e-15
